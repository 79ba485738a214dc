#ifndef TILING_ENUMERATE_HPP
#define TILING_ENUMERATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiling/geomfilter.hpp"
#include "tiling/topology.hpp"

namespace tiling {

struct EnumSpec {
    int n = 7;
    int f = 2;
    Mode mode = Mode::general;
    int split = -1;  // |T+| in orientable mode; requires 0 <= s <= f, 2s >= f
    std::optional<std::string> target;  // surface name, e.g. "3P2"
    bool require_angle_feasible = true;
    int threads = 1;
    std::uint64_t node_budget = 0;  // 0 = unlimited
};

// One tiling, the unit of enumeration output. The diagram is its own
// canonical form; every derived field is recomputable from it.
struct TilingRecord {
    Diagram diagram;
    VertexSet vertices;
    SurfaceClass surface;
    int edge_class_count = 0;
    bool angle_feasible = false;
    std::vector<Rational> witness;  // nonempty iff angle_feasible
    Mode mode = Mode::general;
    int split = -1;
};

// One row of the count table: records bucketed by edge-class count.
struct CountRow {
    std::string surface;
    int n = 0;
    Mode mode = Mode::general;
    int split = -1;
    std::vector<long long> by_lengths;  // index i = count with i edge classes, 1..n
    long long total = 0;
};

struct CountTable {
    int n = 0;
    std::vector<CountRow> rows;
    // CSV with one column per length count, descending from len_n to len_1
    // as in the published table.
    std::string to_csv() const;
};

// Exactly one record per equivalence class of valid diagrams (perfect
// matching, pair conditions, connected, surface match, angle-feasible when
// required), in sorted canonical order regardless of thread count.
std::vector<TilingRecord> enumerate(const EnumSpec& spec);

// Aggregates enumerate(spec) by edge-class count.
CountRow count_table(const EnumSpec& spec);

// Brute-force oracle: sweeps all signed (or unsigned) perfect matchings
// with no symmetry breaking, filters identically, and deduplicates by
// canonical form at the end. Guarded to nf <= 16 (general) / 18
// (orientable).
std::vector<TilingRecord> oracle_enumerate(const EnumSpec& spec);

}  // namespace tiling

#endif
