#include "tiling/convert.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tiling {

namespace {

int mod(int x, int n) { return (x % n + n) % n; }

std::string corner_str(const SignedCorner& c) {
    std::ostringstream os;
    os << "(" << c.label << "_" << c.tile << ")" << (c.sign > 0 ? "+" : "-");
    return os.str();
}

}  // namespace

PairTable::PairTable(const Diagram& d) : n_(d.n()), f_(d.f()) {
    partner_.resize(n_ * f_);
    sign_.resize(n_ * f_);
    for (const auto& p : d.pairs()) {
        partner_[edge_index(p.a, n_)] = p.b;
        partner_[edge_index(p.b, n_)] = p.a;
        sign_[edge_index(p.a, n_)] = p.sign;
        sign_[edge_index(p.b, n_)] = p.sign;
    }
}

SignedCorner next_corner(const PairTable& t, SignedCorner c) {
    const int n = t.n();
    EdgeRef in{c.sign > 0 ? mod(c.label - 1, n) : c.label, c.tile};
    EdgeRef out = t.partner(in);
    int s = c.sign * t.sign(in);
    if (s > 0) return SignedCorner{out.label, out.tile, +1};
    return SignedCorner{mod(out.label + 1, n), out.tile, -1};
}

SignedCorner next_corner(const Diagram& d, SignedCorner c) {
    return next_corner(PairTable(d), c);
}

Vertex::Vertex(std::vector<SignedCorner> cycle) {
    if (cycle.empty()) throw error("vertex: empty corner cycle");
    const size_t k = cycle.size();
    std::vector<SignedCorner> mirrored(k);
    for (size_t i = 0; i < k; ++i) mirrored[i] = mirror(cycle[k - 1 - i]);
    std::vector<SignedCorner> best = cycle, cand(k);
    for (const auto& base : {cycle, mirrored}) {
        for (size_t r = 0; r < k; ++r) {
            for (size_t i = 0; i < k; ++i) cand[i] = base[(r + i) % k];
            if (cand < best) best = cand;
        }
    }
    cycle_ = std::move(best);
}

VertexSet VertexSet::make(int n, int f, std::vector<Vertex> vertices) {
    std::vector<int> seen(n * f, 0);
    for (const auto& v : vertices) {
        for (const auto& c : v.cycle()) {
            if (c.label < 0 || c.label >= n || c.tile < 1 || c.tile > f)
                throw parse_error("vertex set: corner out of range " + corner_str(c));
            if (seen[(c.tile - 1) * n + c.label]++)
                throw parse_error("vertex set: corner appears twice " + corner_str(c));
        }
    }
    for (int i = 0; i < n * f; ++i)
        if (!seen[i])
            throw parse_error("vertex set: corner " + std::to_string(i % n) + "_" +
                              std::to_string(i / n + 1) + " missing");
    std::sort(vertices.begin(), vertices.end());
    VertexSet vs;
    vs.n_ = n;
    vs.f_ = f;
    vs.vertices_ = std::move(vertices);
    return vs;
}

namespace {

int sc_index(const SignedCorner& c, int n, int) {
    return ((c.tile - 1) * n + c.label) * 2 + (c.sign > 0 ? 0 : 1);
}

SignedCorner sc_from_index(int idx, int n) {
    int sign = (idx & 1) ? -1 : +1;
    int e = idx / 2;
    return SignedCorner{e % n, e / n + 1, sign};
}

}  // namespace

VertexSet diagram_to_vertexset(const Diagram& d) {
    const PairTable t(d);
    const int n = d.n(), f = d.f();
    const int total = 2 * n * f;
    std::vector<char> visited(total, 0);
    std::vector<Vertex> out;
    for (int start = 0; start < total; ++start) {
        if (visited[start]) continue;
        std::vector<SignedCorner> cycle;
        SignedCorner c = sc_from_index(start, n);
        do {
            visited[sc_index(c, n, f)] = 1;
            cycle.push_back(c);
            c = next_corner(t, c);
        } while (sc_index(c, n, f) != start);
        // Mark the mirror cycle as visited too; it is the same vertex read
        // the other way around.
        for (const auto& sc : cycle) visited[sc_index(mirror(sc), n, f)] = 1;
        out.emplace_back(std::move(cycle));
    }
    return VertexSet::make(n, f, std::move(out));
}

std::vector<EdgePair> pairs_implied_by_vertex(const Vertex& v, int n) {
    // (i_p)s (j_q)t adjacent means edge (s=+ ? i-1 : i) of tile p is paired
    // with edge (t=+ ? j : j-1) of tile q, with sign s*t.
    std::vector<EdgePair> out;
    const auto& cyc = v.cycle();
    const size_t k = cyc.size();
    for (size_t i = 0; i < k; ++i) {
        const SignedCorner& a = cyc[i];
        const SignedCorner& b = cyc[(i + 1) % k];
        EdgeRef ea{a.sign > 0 ? mod(a.label - 1, n) : a.label, a.tile};
        EdgeRef eb{b.sign > 0 ? b.label : mod(b.label - 1, n), b.tile};
        out.emplace_back(ea, eb, a.sign * b.sign);
    }
    return out;
}

Diagram vertexset_to_diagram(const VertexSet& v) {
    const int n = v.n(), f = v.f();
    std::map<int, EdgePair> by_edge;  // smaller edge index -> pair
    for (const auto& vert : v.vertices()) {
        for (const auto& p : pairs_implied_by_vertex(vert, n)) {
            auto [it, inserted] = by_edge.try_emplace(edge_index(p.a, n), p);
            if (!inserted && !(it->second == p)) {
                std::ostringstream os;
                os << "vertex set: conflicting pairings for edge " << p.a.label << "_" << p.a.tile;
                throw parse_error(os.str());
            }
        }
    }
    std::vector<EdgePair> pairs;
    pairs.reserve(by_edge.size());
    for (auto& [k, p] : by_edge) pairs.push_back(p);
    return Diagram::make(n, f, std::move(pairs));  // rejects non-matchings
}

namespace {

// All consecutive corner pairs over the stored cycles and their mirrors.
std::set<std::pair<int, int>> adjacency_set(const VertexSet& v) {
    const int n = v.n(), f = v.f();
    std::set<std::pair<int, int>> adj;
    for (const auto& vert : v.vertices()) {
        const auto& cyc = vert.cycle();
        const size_t k = cyc.size();
        for (size_t i = 0; i < k; ++i) {
            const SignedCorner& a = cyc[i];
            const SignedCorner& b = cyc[(i + 1) % k];
            adj.emplace(sc_index(a, n, f), sc_index(b, n, f));
            adj.emplace(sc_index(mirror(b), n, f), sc_index(mirror(a), n, f));
        }
    }
    return adj;
}

}  // namespace

ValidityReport check_vertexset(const VertexSet& v) {
    const int n = v.n(), f = v.f();
    ValidityReport report;
    for (const auto& vert : v.vertices()) {
        if (vert.degree() < 3) {
            std::ostringstream os;
            os << "vertex of degree " << vert.degree() << " at " << corner_str(vert.cycle()[0]);
            report.violations.push_back({"min-corners", os.str()});
        }
    }
    const auto adj = adjacency_set(v);
    auto present = [&](const SignedCorner& a, const SignedCorner& b) {
        return adj.count({sc_index(a, n, f), sc_index(b, n, f)}) != 0;
    };
    for (const auto& [ia, ib] : adj) {
        SignedCorner a = sc_from_index(ia, n), b = sc_from_index(ib, n);
        if (a.sign < 0) continue;
        if (b.sign > 0) {
            if (a.tile == b.tile && b.label == mod(a.label - 1, n)) {
                report.violations.push_back(
                    {"adjacent-same-tile", corner_str(a) + corner_str(b)});
            }
            SignedCorner need_a{mod(b.label + 1, n), b.tile, +1};
            SignedCorner need_b{mod(a.label - 1, n), a.tile, +1};
            if (!present(need_a, need_b))
                report.violations.push_back(
                    {"closure-opposing", corner_str(a) + corner_str(b) + " without " +
                                             corner_str(need_a) + corner_str(need_b)});
        } else {
            SignedCorner need_a{mod(b.label - 1, n), b.tile, -1};
            SignedCorner need_b{mod(a.label - 1, n), a.tile, +1};
            if (!present(need_a, need_b))
                report.violations.push_back(
                    {"closure-twisted", corner_str(a) + corner_str(b) + " without " +
                                            corner_str(need_a) + corner_str(need_b)});
        }
    }
    return report;
}

ValidityReport check_pair_conditions(const Diagram& d) {
    const int n = d.n();
    const PairTable t(d);
    ValidityReport report;
    auto paired_as = [&](EdgeRef x, EdgeRef y, int sign) {
        return t.partner(x) == y && t.sign(x) == sign;
    };
    std::set<std::string> seen;
    auto add = [&](const char* cond, const EdgePair& p, const EdgePair& q) {
        EdgePair lo = p, hi = q;
        if (hi < lo) std::swap(lo, hi);
        std::ostringstream os;
        os << "(" << lo.a.label << "_" << lo.a.tile << "," << lo.b.label << "_" << lo.b.tile
           << ")" << (lo.sign > 0 ? "+" : "-");
        if (!(lo == hi))
            os << " with (" << hi.a.label << "_" << hi.a.tile << "," << hi.b.label << "_"
               << hi.b.tile << ")" << (hi.sign > 0 ? "+" : "-");
        if (seen.insert(std::string(cond) + os.str()).second)
            report.violations.push_back({cond, os.str()});
    };
    for (const auto& p : d.pairs()) {
        // Both orderings of the unordered pair.
        const EdgeRef ends[2][2] = {{p.a, p.b}, {p.b, p.a}};
        for (const auto& e : ends) {
            const EdgeRef i = e[0], j = e[1];
            if (p.sign > 0 && i.tile == j.tile && j.label == mod(i.label + 1, n))
                add("degree-1", p, p);
            EdgeRef ip1{mod(i.label + 1, n), i.tile};
            if (p.sign > 0) {
                EdgeRef jm1{mod(j.label - 1, n), j.tile};
                if (!(ip1 == j) && paired_as(ip1, jm1, +1))
                    add("degree-2-opposing", p, EdgePair(ip1, jm1, +1));
            } else {
                EdgeRef jp1{mod(j.label + 1, n), j.tile};
                if (!(ip1 == j) && paired_as(ip1, jp1, -1))
                    add("degree-2-twisted", p, EdgePair(ip1, jp1, -1));
            }
        }
    }
    return report;
}

}  // namespace tiling
