#include "tiling/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tiling {

namespace {

std::string pair_str(const EdgePair& p) {
    std::ostringstream os;
    os << "(" << p.a.label << "_" << p.a.tile << "," << p.b.label << "_" << p.b.tile << ")"
       << (p.sign > 0 ? "+" : "-");
    return os.str();
}

}  // namespace

Diagram Diagram::make(int n, int f, std::vector<EdgePair> pairs) {
    if (n < 3) throw error("diagram: n must be >= 3, got " + std::to_string(n));
    if (f < 1) throw error("diagram: f must be >= 1, got " + std::to_string(f));
    const int edges = n * f;
    std::vector<int> seen(edges, 0);
    for (auto& p : pairs) {
        if (p.b < p.a) std::swap(p.a, p.b);
        for (const EdgeRef* e : {&p.a, &p.b}) {
            if (e->label < 0 || e->label >= n || e->tile < 1 || e->tile > f)
                throw parse_error("diagram: edge out of range in pair " + pair_str(p));
        }
        if (p.a == p.b) throw parse_error("diagram: pair glues an edge to itself " + pair_str(p));
        if (p.sign != 1 && p.sign != -1)
            throw parse_error("diagram: sign must be +1 or -1 in pair " + pair_str(p));
        for (const EdgeRef* e : {&p.a, &p.b}) {
            if (seen[edge_index(*e, n)]++)
                throw parse_error("diagram: edge matched twice in pair " + pair_str(p));
        }
    }
    for (int i = 0; i < edges; ++i) {
        if (!seen[i]) {
            EdgeRef e = edge_from_index(i, n);
            throw parse_error("diagram: not a perfect matching, edge " + std::to_string(e.label) +
                              "_" + std::to_string(e.tile) + " unmatched");
        }
    }
    std::sort(pairs.begin(), pairs.end());
    Diagram d;
    d.n_ = n;
    d.f_ = f;
    d.pairs_ = std::move(pairs);
    return d;
}

std::vector<std::uint32_t> Diagram::encoding() const {
    std::vector<std::uint32_t> enc;
    enc.reserve(pairs_.size());
    for (const auto& p : pairs_) {
        enc.push_back(static_cast<std::uint32_t>(edge_index(p.a, n_)) << 16 |
                      static_cast<std::uint32_t>(edge_index(p.b, n_)) << 8 |
                      static_cast<std::uint32_t>(sign_key(p.sign)));
    }
    return enc;
}

namespace {

int mod(int x, int n) { return (x % n + n) % n; }

void check_element(const Diagram& d, const SymmetryElement& g) {
    const int f = d.f();
    if (static_cast<int>(g.tile_perm.size()) != f)
        throw std::invalid_argument("apply_symmetry: tile permutation has size " +
                                    std::to_string(g.tile_perm.size()) + ", expected " +
                                    std::to_string(f));
    std::vector<int> hit(f, 0);
    for (int img : g.tile_perm) {
        if (img < 1 || img > f || hit[img - 1]++)
            throw std::invalid_argument("apply_symmetry: tile map is not a permutation of 1.." +
                                        std::to_string(f));
    }
}

}  // namespace

Diagram apply_symmetry(const Diagram& d, const SymmetryElement& g) {
    check_element(d, g);
    const int n = d.n();
    std::vector<EdgePair> out;
    out.reserve(d.pairs().size());
    auto map_edge = [&](EdgeRef e) {
        int l = g.reflect ? mod(g.shift - e.label - 1, n) : mod(g.shift + e.label, n);
        return EdgeRef{l, g.tile_perm[e.tile - 1]};
    };
    for (const auto& p : d.pairs()) out.emplace_back(map_edge(p.a), map_edge(p.b), p.sign);
    return Diagram::make(n, d.f(), std::move(out));
}

std::vector<SymmetryElement> symmetry_group(int n, int f) {
    std::vector<SymmetryElement> group;
    std::vector<int> perm(f);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (int c = 0; c < n; ++c) {
            group.push_back(SymmetryElement{c, false, perm, false});
            group.push_back(SymmetryElement{c, true, perm, false});
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return group;
}

std::vector<SymmetryElement> symmetry_group_orientable(int n, int f, int s) {
    if (s < 0 || s > f || 2 * s < f)
        throw std::invalid_argument("orientable split requires 0 <= s <= f and 2s >= f");
    std::vector<SymmetryElement> group;
    std::vector<int> perm(f);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool preserves = true, swaps = (2 * s == f);
        for (int p = 1; p <= f; ++p) {
            bool in_plus = p <= s, img_in_plus = perm[p - 1] <= s;
            if (in_plus != img_in_plus) preserves = false;
            if (in_plus == img_in_plus) swaps = false;
        }
        if (!preserves && !swaps) continue;
        for (int c = 0; c < n; ++c) {
            group.push_back(SymmetryElement{c, false, perm, swaps});
            group.push_back(SymmetryElement{c, true, perm, swaps});
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return group;
}

std::vector<std::uint8_t> edge_map(const SymmetryElement& g, int n, int f) {
    std::vector<std::uint8_t> m(static_cast<size_t>(n) * f);
    for (int idx = 0; idx < n * f; ++idx) {
        int l = idx % n, t = idx / n + 1;
        int l2 = g.reflect ? mod(g.shift - l - 1, n) : mod(g.shift + l, n);
        m[idx] = static_cast<std::uint8_t>((g.tile_perm[t - 1] - 1) * n + l2);
    }
    return m;
}

Diagram diagram_from_encoding(const std::vector<std::uint32_t>& enc, int n, int f) {
    std::vector<EdgePair> pairs;
    pairs.reserve(enc.size());
    for (std::uint32_t v : enc) {
        EdgeRef a = edge_from_index(static_cast<int>(v >> 16), n);
        EdgeRef b = edge_from_index(static_cast<int>((v >> 8) & 0xff), n);
        pairs.emplace_back(a, b, (v & 1) ? -1 : +1);
    }
    return Diagram::make(n, f, std::move(pairs));
}

Diagram canonical_form(const Diagram& d, const std::vector<SymmetryElement>& group) {
    const int n = d.n(), f = d.f();
    const auto enc0 = d.encoding();
    std::vector<std::uint32_t> best = enc0;
    std::vector<std::uint32_t> img(enc0.size());
    for (const auto& g : group) {
        const auto em = edge_map(g, n, f);
        for (size_t i = 0; i < enc0.size(); ++i) {
            std::uint32_t v = enc0[i];
            std::uint8_t a = em[v >> 16], b = em[(v >> 8) & 0xff];
            if (a > b) std::swap(a, b);
            img[i] = static_cast<std::uint32_t>(a) << 16 | static_cast<std::uint32_t>(b) << 8 |
                     (v & 1);
        }
        std::sort(img.begin(), img.end());
        if (img < best) best = img;
    }
    return diagram_from_encoding(best, n, f);
}

Diagram canonical_form(const Diagram& d, Mode mode, int split) {
    const auto group = mode == Mode::general ? symmetry_group(d.n(), d.f())
                                             : symmetry_group_orientable(d.n(), d.f(), split);
    return canonical_form(d, group);
}

}  // namespace tiling
