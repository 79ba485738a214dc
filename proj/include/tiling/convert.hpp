#ifndef TILING_CONVERT_HPP
#define TILING_CONVERT_HPP

#include <string>
#include <vector>

#include "tiling/diagram.hpp"

namespace tiling {

// A corner decorated with the traversal orientation of its tile.
struct SignedCorner {
    int label = 0;
    int tile = 1;
    int sign = +1;

    friend bool operator==(const SignedCorner& x, const SignedCorner& y) {
        return x.label == y.label && x.tile == y.tile && x.sign == y.sign;
    }
    friend bool operator<(const SignedCorner& x, const SignedCorner& y) {
        if (x.tile != y.tile) return x.tile < y.tile;
        if (x.label != y.label) return x.label < y.label;
        return sign_key(x.sign) < sign_key(y.sign);
    }
};

inline SignedCorner mirror(SignedCorner c) {
    c.sign = -c.sign;
    return c;
}

// O(1) partner lookups for a diagram.
class PairTable {
  public:
    explicit PairTable(const Diagram& d);

    EdgeRef partner(const EdgeRef& e) const { return partner_[edge_index(e, n_)]; }
    int sign(const EdgeRef& e) const { return sign_[edge_index(e, n_)]; }
    int n() const { return n_; }
    int f() const { return f_; }

  private:
    int n_, f_;
    std::vector<EdgeRef> partner_;
    std::vector<int> sign_;
};

// One step of the corner walk around a vertex. At (i_p)+ the incoming edge
// is edge i-1 of tile p; at (i_p)- it is edge i. If that edge is paired
// with edge j of tile q with pair sign sigma, the successor sign is
// s' = s*sigma, and the successor corner is (j_q)+ when s'=+ and
// ((j+1)_q)- when s'=-.
SignedCorner next_corner(const PairTable& t, SignedCorner c);
SignedCorner next_corner(const Diagram& d, SignedCorner c);

// A vertex: a circular sequence of signed corners, stored in canonical
// form. Rotating the sequence, or reversing it while flipping every sign,
// gives the same vertex; the canonical representative is the
// lexicographically least over all of those readings.
class Vertex {
  public:
    Vertex() = default;
    explicit Vertex(std::vector<SignedCorner> cycle);

    const std::vector<SignedCorner>& cycle() const& { return cycle_; }
    std::vector<SignedCorner> cycle() && { return std::move(cycle_); }
    int degree() const { return static_cast<int>(cycle_.size()); }

    friend bool operator==(const Vertex& x, const Vertex& y) { return x.cycle_ == y.cycle_; }
    friend bool operator<(const Vertex& x, const Vertex& y) { return x.cycle_ < y.cycle_; }

  private:
    std::vector<SignedCorner> cycle_;
};

// The partition of all corners into vertices.
class VertexSet {
  public:
    VertexSet() = default;

    // Validates that the underlying corners (ignoring signs) partition
    // Z_n x {1..f}; sorts the vertices.
    static VertexSet make(int n, int f, std::vector<Vertex> vertices);

    int n() const { return n_; }
    int f() const { return f_; }
    const std::vector<Vertex>& vertices() const& { return vertices_; }
    std::vector<Vertex> vertices() && { return std::move(vertices_); }

    friend bool operator==(const VertexSet& x, const VertexSet& y) {
        return x.n_ == y.n_ && x.f_ == y.f_ && x.vertices_ == y.vertices_;
    }

  private:
    int n_ = 0;
    int f_ = 0;
    std::vector<Vertex> vertices_;
};

// Report-valued validity checks: every violated condition is listed with a
// witness, so the enumerator's pruning stays debuggable.
struct Violation {
    std::string condition;
    std::string witness;
};

struct ValidityReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Cycles of next_corner, grouped into mirror pairs, one canonical Vertex
// per pair. The vertex count is half the cycle count.
VertexSet diagram_to_vertexset(const Diagram& d);

// The edge pairs implied by the consecutive corners of one vertex cycle
// (including the wraparound adjacency). Exposed for tests against the
// worked derivations.
std::vector<EdgePair> pairs_implied_by_vertex(const Vertex& v, int n);

// Inverse of diagram_to_vertexset on genuine vertex sets. Throws
// parse_error when adjacent-corner rules force two different partners on
// one edge, or leave some edge unpaired.
Diagram vertexset_to_diagram(const VertexSet& v);

// The four vertex-set conditions: every vertex has >= 3 corners;
// (i_p)+((i-1)_p)+ never occurs; (i_p)+(j_q)+ forces ((j+1)_q)+((i-1)_p)+;
// (i_p)+(j_q)- forces ((j-1)_q)-((i-1)_p)+.
ValidityReport check_vertexset(const VertexSet& v);

// The dual conditions on edge pairs: no degree-1 pair (i, i+1 on one tile,
// opposing) and neither of the two degree-2 configurations. Passing is
// equivalent to every vertex of diagram_to_vertexset(d) having degree >= 3.
ValidityReport check_pair_conditions(const Diagram& d);

}  // namespace tiling

#endif
