#include "tiling/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstring>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace tiling {

namespace {

constexpr int kMaxEdges = 64;
constexpr int kMaxPairs = 32;
constexpr int kMaxTiles = 8;

int mod(int x, int n) { return (x % n + n) % n; }

bool is_identity(const std::vector<std::uint8_t>& m) {
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i] != i) return false;
    return true;
}

// Tile components with orientation parity; small enough to copy per frame.
struct Tiles {
    std::uint8_t parent[kMaxTiles + 1];
    std::uint8_t par[kMaxTiles + 1];  // parity relative to parent
    std::uint8_t size[kMaxTiles + 1];
    std::int16_t unmatched[kMaxTiles + 1];
    int ncomp = 0;
    int conflicts = 0;

    void init(int n, int f) {
        for (int t = 1; t <= f; ++t) {
            parent[t] = static_cast<std::uint8_t>(t);
            par[t] = 0;
            size[t] = 1;
            unmatched[t] = static_cast<std::int16_t>(n);
        }
        ncomp = f;
        conflicts = 0;
    }
    std::pair<int, int> find(int x) const {
        int p = 0;
        while (parent[x] != x) {
            p ^= par[x];
            x = parent[x];
        }
        return {x, p};
    }
    void merge(int a, int b, int rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            if ((pa ^ pb) != rel) ++conflicts;
            return;
        }
        if (size[ra] > size[rb]) {
            std::swap(ra, rb);
            std::swap(pa, pb);
        }
        parent[ra] = static_cast<std::uint8_t>(rb);
        par[ra] = static_cast<std::uint8_t>(pa ^ pb ^ rel);
        size[rb] = static_cast<std::uint8_t>(size[rb] + size[ra]);
        unmatched[rb] = static_cast<std::int16_t>(unmatched[rb] + unmatched[ra]);
        --ncomp;
    }
};

struct State {
    std::int8_t partner[kMaxEdges];
    std::int8_t psign[kMaxEdges];
    std::uint8_t pa[kMaxPairs];
    std::uint8_t pb[kMaxPairs];
    std::int8_t ps[kMaxPairs];
    std::uint32_t packed[kMaxPairs];
    int k = 0;
    Tiles tiles;
};

struct WalkInfo {
    int cycles = 0;
    int paths = 0;
};

class Searcher {
  public:
    explicit Searcher(const EnumSpec& spec) : spec_(spec) {
        n_ = spec.n;
        f_ = spec.f;
        E_ = n_ * f_;
        P_ = E_ / 2;
        if (n_ < 3) throw error("enumerate: n must be >= 3");
        if (f_ < 1 || f_ > kMaxTiles) throw error("enumerate: f out of supported range");
        if (E_ > kMaxEdges) throw error("enumerate: instance too large");
        if (spec.mode == Mode::orientable) {
            if (spec.split < 0 || spec.split > f_ || 2 * spec.split < f_)
                throw error("enumerate: orientable split requires 0 <= s <= f and 2s >= f");
        }
        if (spec.target) {
            auto s = SurfaceClass::from_name(*spec.target);
            if (!s) throw error("enumerate: unknown surface name " + *spec.target);
            target_ = *s;
            ParamReport pr = validate_params(n_, f_, s->chi);  // throws if n < 7
            if (!pr.admissible())
                throw error("enumerate: (n=" + std::to_string(n_) + ", f=" + std::to_string(f_) +
                            ", chi=" + std::to_string(s->chi) + ") violates the admissibility bounds");
            v_target_ = s->chi + E_ / 2 - f_;
        }
        const auto group = spec.mode == Mode::general
                               ? symmetry_group(n_, f_)
                               : symmetry_group_orientable(n_, f_, spec.split);
        for (const auto& g : group) {
            auto m = edge_map(g, n_, f_);
            if (!is_identity(m)) maps_.push_back(std::move(m));
        }
    }

    // Every valid first move (partner and sign for edge 0); the units of
    // parallel work.
    struct Task {
        int e2;
        int sign;
    };

    std::vector<std::vector<std::uint32_t>> run() {
        if (E_ % 2 != 0) return {};
        std::vector<Task> tasks;
        for (int e2 = 1; e2 < E_; ++e2)
            for (int s : allowed_signs(0, e2)) tasks.push_back({e2, s});

        int nthreads = std::max(1, spec_.threads);
        nthreads = std::min<int>(nthreads, static_cast<int>(tasks.size()));
        std::atomic<size_t> next_task{0};
        std::atomic<int> tasks_done{0};
        std::vector<std::vector<std::vector<std::uint32_t>>> buckets(tasks.size());
        std::exception_ptr first_error;
        std::mutex error_mu;
        auto worker = [&]() {
            for (;;) {
                size_t i = next_task.fetch_add(1);
                if (i >= tasks.size()) return;
                try {
                    run_task(tasks[i], buckets[i]);
                    tasks_done.fetch_add(1);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!first_error) first_error = std::current_exception();
                    abort_.store(true);
                    return;
                }
            }
        };
        if (nthreads <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        if (first_error) {
            try {
                std::rethrow_exception(first_error);
            } catch (const budget_error&) {
                throw budget_error("enumerate: node budget exceeded", tasks_done.load(),
                                   static_cast<int>(tasks.size()));
            }
        }
        std::vector<std::vector<std::uint32_t>> out;
        for (auto& b : buckets)
            for (auto& enc : b) out.push_back(std::move(enc));
        std::sort(out.begin(), out.end());
        return out;
    }

  private:
    std::vector<int> allowed_signs(int e1, int e2) const {
        if (spec_.mode == Mode::general) return {+1, -1};
        int t1 = e1 / n_ + 1, t2 = e2 / n_ + 1;
        bool same_side = (t1 <= spec_.split) == (t2 <= spec_.split);
        return {same_side ? +1 : -1};
    }

    void run_task(const Task& task, std::vector<std::vector<std::uint32_t>>& out) {
        State st;
        std::memset(st.partner, -1, sizeof(st.partner));
        st.tiles.init(n_, f_);
        st.k = 0;
        if (!try_add(st, 0, task.e2, task.sign)) return;
        if (!pruned(st)) search(st, 1, out);
    }

    bool local_violation(const State& st, int e1, int e2, int sign) const {
        const int l1 = e1 % n_, t1 = e1 / n_, l2 = e2 % n_, t2 = e2 / n_;
        if (sign > 0 && t1 == t2 && (l2 == (l1 + 1) % n_ || l1 == (l2 + 1) % n_))
            return true;  // degree-1 vertex
        auto at = [&](int tile0, int label) { return tile0 * n_ + label; };
        auto paired = [&](int x, int y, int s) {
            return st.partner[x] == static_cast<std::int8_t>(y) && st.psign[x] == s;
        };
        if (sign > 0) {
            // degree-2, opposing way, seen from both sides
            if (paired(at(t1, (l1 + 1) % n_), at(t2, mod(l2 - 1, n_)), +1)) return true;
            if (paired(at(t1, mod(l1 - 1, n_)), at(t2, (l2 + 1) % n_), +1)) return true;
        } else {
            // degree-2, twisted way
            if (paired(at(t1, (l1 + 1) % n_), at(t2, (l2 + 1) % n_), -1)) return true;
            if (paired(at(t1, mod(l1 - 1, n_)), at(t2, mod(l2 - 1, n_)), -1)) return true;
        }
        return false;
    }

    bool try_add(State& st, int e1, int e2, int sign) {
        if (local_violation(st, e1, e2, sign)) return false;
        st.partner[e1] = static_cast<std::int8_t>(e2);
        st.partner[e2] = static_cast<std::int8_t>(e1);
        st.psign[e1] = st.psign[e2] = static_cast<std::int8_t>(sign);
        st.pa[st.k] = static_cast<std::uint8_t>(e1);
        st.pb[st.k] = static_cast<std::uint8_t>(e2);
        st.ps[st.k] = static_cast<std::int8_t>(sign);
        st.packed[st.k] = static_cast<std::uint32_t>(e1) << 16 |
                          static_cast<std::uint32_t>(e2) << 8 |
                          static_cast<std::uint32_t>(sign < 0);
        ++st.k;
        int t1 = e1 / n_ + 1, t2 = e2 / n_ + 1;
        if (t1 == t2) {
            if (sign < 0) ++st.tiles.conflicts;
        } else {
            st.tiles.merge(t1, t2, sign > 0 ? 0 : 1);
        }
        int r1 = st.tiles.find(t1).first;
        --st.tiles.unmatched[r1];
        int r2 = st.tiles.find(t2).first;
        --st.tiles.unmatched[r2];
        return true;
    }

    void remove_pair(State& st, int e1, int e2) {
        st.partner[e1] = st.partner[e2] = -1;
        --st.k;
    }

    // True when no completion of this node can produce a new canonical
    // record: a dead component, an impossible vertex count, an orientation
    // conflict against an orientable target, or a group image that is
    // provably lexicographically smaller.
    bool pruned(State& st) {
        int r1 = st.tiles.find(st.pa[st.k - 1] / n_ + 1).first;
        if (st.tiles.unmatched[r1] == 0 && st.tiles.size[r1] < f_) return true;
        int r2 = st.tiles.find(st.pb[st.k - 1] / n_ + 1).first;
        if (st.tiles.unmatched[r2] == 0 && st.tiles.size[r2] < f_) return true;
        if (target_ && target_->orientable && st.tiles.conflicts > 0) return true;
        if (target_) {
            WalkInfo w = walk(st);
            if (w.cycles / 2 + (w.paths > 0 ? 1 : 0) > v_target_) return true;
            if (w.cycles + w.paths < 2 * v_target_) return true;
        }
        return dominated(st);
    }

    WalkInfo walk(const State& st) const {
        int nxt[2 * kMaxEdges];
        std::uint8_t indeg[2 * kMaxEdges];
        const int total = 2 * E_;
        std::memset(indeg, 0, static_cast<size_t>(total));
        for (int c = 0; c < total; ++c) {
            int e = c >> 1;
            bool neg = c & 1;
            int base = (e / n_) * n_, l = e % n_;
            int in = neg ? e : base + (l + n_ - 1) % n_;
            if (st.partner[in] < 0) {
                nxt[c] = -1;
                continue;
            }
            int out = st.partner[in];
            bool sneg = neg == (st.psign[in] > 0);  // s' = s * sigma
            int t;
            if (!sneg) {
                t = out << 1;
            } else {
                int ob = (out / n_) * n_;
                t = ((ob + (out % n_ + 1) % n_) << 1) | 1;
            }
            nxt[c] = t;
            ++indeg[t];
        }
        WalkInfo w;
        char visited[2 * kMaxEdges];
        std::memset(visited, 0, static_cast<size_t>(total));
        for (int c = 0; c < total; ++c) {
            if (indeg[c] || visited[c]) continue;
            ++w.paths;
            for (int x = c; x >= 0 && !visited[x]; x = nxt[x]) visited[x] = 1;
        }
        for (int c = 0; c < total; ++c) {
            if (visited[c]) continue;
            ++w.cycles;
            for (int x = c; !visited[x]; x = nxt[x]) visited[x] = 1;
        }
        return w;
    }

    // Orderly-generation test: some relabeling sends the decided pairs to a
    // sorted sequence that every completion keeps strictly smaller.
    bool dominated(const State& st) const {
        const int k = st.k;
        for (const auto& em : maps_) {
            std::uint32_t img[kMaxPairs];
            for (int i = 0; i < k; ++i) {
                std::uint8_t a = em[st.pa[i]], b = em[st.pb[i]];
                if (a > b) std::swap(a, b);
                std::uint32_t v = static_cast<std::uint32_t>(a) << 16 |
                                  static_cast<std::uint32_t>(b) << 8 |
                                  static_cast<std::uint32_t>(st.ps[i] < 0);
                int j = i;
                while (j > 0 && img[j - 1] > v) {
                    img[j] = img[j - 1];
                    --j;
                }
                img[j] = v;
            }
            std::uint64_t covered = 0;
            for (int i = 0; i < k; ++i) {
                // By induction the compared prefixes are equal, so the least
                // uncovered edge is the same for both; the current pair
                // starts exactly there.
                std::uint32_t x = static_cast<std::uint32_t>(std::countr_zero(~covered));
                if ((img[i] >> 16) != x) break;  // image partner undecided here
                if (img[i] < st.packed[i]) return true;
                if (img[i] > st.packed[i]) break;
                covered |= (1ull << x) | (1ull << ((img[i] >> 8) & 0xff));
            }
        }
        return false;
    }

    void search(State& st, int hint, std::vector<std::vector<std::uint32_t>>& out) {
        if (spec_.node_budget && ++nodes_ > spec_.node_budget)
            throw budget_error("node budget exceeded", 0, 0);
        if (abort_.load(std::memory_order_relaxed))
            throw budget_error("aborted", 0, 0);
        int e = hint;
        while (e < E_ && st.partner[e] >= 0) ++e;
        if (e == E_) {
            leaf(st, out);
            return;
        }
        for (int e2 = e + 1; e2 < E_; ++e2) {
            if (st.partner[e2] >= 0) continue;
            for (int sign : allowed_signs(e, e2)) {
                Tiles saved = st.tiles;
                if (try_add(st, e, e2, sign)) {
                    if (!pruned(st)) search(st, e + 1, out);
                    remove_pair(st, e, e2);
                }
                st.tiles = saved;
            }
        }
    }

    void leaf(State& st, std::vector<std::vector<std::uint32_t>>& out) {
        if (st.tiles.ncomp != 1) return;  // disconnected
        WalkInfo w = walk(st);
        int v = w.cycles / 2;
        int chi = v - E_ / 2 + f_;
        bool orientable = st.tiles.conflicts == 0;
        if (target_ && (chi != target_->chi || orientable != target_->orientable)) return;
        out.emplace_back(st.packed, st.packed + P_);
    }

    EnumSpec spec_;
    int n_, f_, E_, P_;
    std::optional<SurfaceClass> target_;
    int v_target_ = -1;
    std::vector<std::vector<std::uint8_t>> maps_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> abort_{false};
};

// Derives every record field afresh from the diagram, re-validating it.
TilingRecord build_record(Diagram d, const EnumSpec& spec) {
    TilingRecord r;
    r.vertices = diagram_to_vertexset(d);
    r.surface = classify_surface(d);
    r.edge_class_count = edge_classes(d).count;
    FeasibilityVerdict fv = check_positive_solution(build_angle_system(r.vertices));
    r.angle_feasible = fv.feasible;
    r.witness = std::move(fv.witness);
    r.mode = spec.mode;
    r.split = spec.mode == Mode::orientable ? spec.split : -1;
    r.diagram = std::move(d);
    return r;
}

std::vector<TilingRecord> finalize_records(std::vector<std::vector<std::uint32_t>> encodings,
                                           const EnumSpec& spec) {
    std::vector<TilingRecord> out;
    out.reserve(encodings.size());
    for (const auto& enc : encodings) {
        TilingRecord r = build_record(diagram_from_encoding(enc, spec.n, spec.f), spec);
        if (!check_pair_conditions(r.diagram).ok())
            throw std::logic_error("enumerate emitted a diagram violating the pair conditions");
        if (spec.require_angle_feasible && !r.angle_feasible) continue;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

std::vector<TilingRecord> enumerate(const EnumSpec& spec) {
    Searcher searcher(spec);
    return finalize_records(searcher.run(), spec);
}

CountRow count_table(const EnumSpec& spec) {
    CountRow row;
    row.surface = spec.target.value_or("");
    row.n = spec.n;
    row.mode = spec.mode;
    row.split = spec.mode == Mode::orientable ? spec.split : -1;
    row.by_lengths.assign(spec.n + 1, 0);
    for (const auto& r : enumerate(spec)) {
        ++row.by_lengths[r.edge_class_count];
        ++row.total;
        if (row.surface.empty()) row.surface = r.surface.name();
    }
    return row;
}

std::string CountTable::to_csv() const {
    std::ostringstream os;
    os << "surface,n,mode,split";
    for (int len = n; len >= 1; --len) os << ",len_" << len;
    os << ",total\n";
    for (const auto& row : rows) {
        os << row.surface << "," << row.n << ","
           << (row.mode == Mode::general ? "general" : "orientable") << ",";
        if (row.mode == Mode::orientable) os << row.split;
        for (int len = n; len >= 1; --len)
            os << "," << (len < static_cast<int>(row.by_lengths.size()) ? row.by_lengths[len] : 0);
        os << "," << row.total << "\n";
    }
    return os.str();
}

std::vector<TilingRecord> oracle_enumerate(const EnumSpec& spec) {
    const int n = spec.n, f = spec.f, E = n * f;
    if (spec.mode == Mode::general && E > 16)
        throw error("oracle_enumerate: nf > 16 exceeds the general-mode budget");
    if (spec.mode == Mode::orientable && E > 18)
        throw error("oracle_enumerate: nf > 18 exceeds the orientable-mode budget");
    if (spec.mode == Mode::orientable && (spec.split < 0 || spec.split > f || 2 * spec.split < f))
        throw error("oracle_enumerate: bad split");
    std::optional<SurfaceClass> target;
    if (spec.target) {
        target = SurfaceClass::from_name(*spec.target);
        if (!target) throw error("oracle_enumerate: unknown surface " + *spec.target);
    }
    if (E % 2 != 0) return {};

    const auto group = spec.mode == Mode::general
                           ? symmetry_group(n, f)
                           : symmetry_group_orientable(n, f, spec.split);
    std::vector<int> partner(E, -1), psign(E, 0);
    std::set<std::vector<std::uint32_t>> unique;
    std::vector<EdgePair> pairs;

    auto leaf = [&]() {
        pairs.clear();
        for (int e = 0; e < E; ++e)
            if (partner[e] > e)
                pairs.emplace_back(edge_from_index(e, n), edge_from_index(partner[e], n),
                                   psign[e]);
        Diagram d = Diagram::make(n, f, pairs);
        if (!check_pair_conditions(d).ok()) return;  // unreachable given local checks
        if (!connectivity(d)) return;
        SurfaceClass s = classify_surface(d);
        if (target && !(s == *target)) return;
        Diagram canon = canonical_form(d, group);
        unique.insert(canon.encoding());
    };

    // No symmetry breaking: every signed perfect matching is visited.
    auto violates = [&](int e1, int e2, int sign) {
        int l1 = e1 % n, t1 = e1 / n, l2 = e2 % n, t2 = e2 / n;
        if (sign > 0 && t1 == t2 && (l2 == (l1 + 1) % n || l1 == (l2 + 1) % n)) return true;
        auto paired = [&](int x, int y, int s) { return partner[x] == y && psign[x] == s; };
        auto at = [&](int t, int l) { return t * n + l; };
        if (sign > 0)
            return paired(at(t1, (l1 + 1) % n), at(t2, mod(l2 - 1, n)), +1) ||
                   paired(at(t1, mod(l1 - 1, n)), at(t2, (l2 + 1) % n), +1);
        return paired(at(t1, (l1 + 1) % n), at(t2, (l2 + 1) % n), -1) ||
               paired(at(t1, mod(l1 - 1, n)), at(t2, mod(l2 - 1, n)), -1);
    };
    auto signs_for = [&](int e1, int e2) -> std::vector<int> {
        if (spec.mode == Mode::general) return {+1, -1};
        int t1 = e1 / n + 1, t2 = e2 / n + 1;
        return {(t1 <= spec.split) == (t2 <= spec.split) ? +1 : -1};
    };
    std::function<void(int)> rec = [&](int hint) {
        int e = hint;
        while (e < E && partner[e] >= 0) ++e;
        if (e == E) {
            leaf();
            return;
        }
        for (int e2 = e + 1; e2 < E; ++e2) {
            if (partner[e2] >= 0) continue;
            for (int sign : signs_for(e, e2)) {
                if (violates(e, e2, sign)) continue;
                partner[e] = e2;
                partner[e2] = e;
                psign[e] = psign[e2] = sign;
                rec(e + 1);
                partner[e] = partner[e2] = -1;
            }
        }
    };
    rec(0);

    std::vector<std::vector<std::uint32_t>> encodings(unique.begin(), unique.end());
    return finalize_records(std::move(encodings), spec);
}

}  // namespace tiling
