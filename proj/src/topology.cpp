#include "tiling/topology.hpp"

#include <numeric>
#include <stdexcept>

namespace tiling {

std::string SurfaceClass::name() const {
    if (!connected) throw error("surface name undefined for disconnected surface");
    int g = orientable ? (2 - chi) / 2 : 2 - chi;
    return std::to_string(g) + (orientable ? "T2" : "P2");
}

std::optional<SurfaceClass> SurfaceClass::from_name(const std::string& name) {
    size_t i = 0;
    while (i < name.size() && name[i] >= '0' && name[i] <= '9') ++i;
    if (i == 0 || i + 2 != name.size()) return std::nullopt;
    if (name[i + 1] != '2' || (name[i] != 'T' && name[i] != 'P')) return std::nullopt;
    int g = std::stoi(name.substr(0, i));
    if (g < 1) return std::nullopt;
    SurfaceClass s;
    s.connected = true;
    s.orientable = name[i] == 'T';
    s.chi = s.orientable ? 2 - 2 * g : 2 - g;
    return s;
}

namespace {

struct TileUf {
    std::vector<int> parent;
    std::vector<int> parity;  // color relative to parent

    explicit TileUf(int f) : parent(f + 1), parity(f + 1, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::pair<int, int> find(int x) {
        int par = 0;
        while (parent[x] != x) {
            par ^= parity[x];
            x = parent[x];
        }
        return {x, par};
    }
    // Returns false on a parity conflict; relation: color(a) ^ color(b) == rel.
    bool merge(int a, int b, int rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == rel;
        parent[ra] = rb;
        parity[ra] = pa ^ pb ^ rel;
        return true;
    }
};

}  // namespace

bool connectivity(const Diagram& d) {
    TileUf uf(d.f());
    for (const auto& p : d.pairs())
        if (p.a.tile != p.b.tile) uf.merge(p.a.tile, p.b.tile, 0);
    int root = uf.find(1).first;
    for (int t = 2; t <= d.f(); ++t)
        if (uf.find(t).first != root) return false;
    return true;
}

SurfaceClass classify_surface(const Diagram& d) {
    if (!connectivity(d)) throw error("classify_surface: diagram is disconnected");
    const int v = static_cast<int>(diagram_to_vertexset(d).vertices().size());
    const int e = d.n() * d.f() / 2;
    SurfaceClass s;
    s.connected = true;
    s.chi = v - e + d.f();
    // Orientable iff tiles can be 2-colored with eps_p*eps_q = sign on every
    // pair; a twisted pair within a single tile rules it out at once.
    TileUf uf(d.f());
    s.orientable = true;
    for (const auto& p : d.pairs()) {
        if (p.a.tile == p.b.tile) {
            if (p.sign < 0) s.orientable = false;
        } else if (!uf.merge(p.a.tile, p.b.tile, p.sign > 0 ? 0 : 1)) {
            s.orientable = false;
        }
        if (!s.orientable) break;
    }
    return s;
}

ParamReport validate_params(int n, int f, int chi) {
    if (n < 7) throw std::domain_error("validate_params: n must be >= 7");
    if (chi >= 0) throw std::domain_error("validate_params: chi must be negative");
    if (f < 1) throw std::domain_error("validate_params: f must be >= 1");
    ParamReport r;
    // All denominators are positive for n >= 7, so cross-multiplication is
    // exact.
    r.f_above_lower = f * (n - 2) > -2 * chi;
    r.f_within_upper = f * (n - 6) <= -6 * chi;
    r.n_bound = (n % 2 == 1) ? n <= 3 * (2 - chi) : n <= 6 * (1 - chi);
    r.distinct_impossible = f * (n - 4) > -4 * chi;
    return r;
}

}  // namespace tiling
