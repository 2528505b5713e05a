#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include <coinv/params.hpp>

namespace coinv {

// Q values per box, aligned with boxes(shape) order.
using QFilling = std::vector<int>;

// Q(box) < bound
struct BoxBound {
    std::size_t box;
    long long bound;
};

// Q(box) <= Q(other) + kappa
struct PairBound {
    std::size_t box;
    std::size_t other;
    long long kappa;
};

struct ConstraintSet {
    Bipartition shape;
    std::vector<BBox> box_list;
    std::vector<BoxBound> box_bounds;
    std::vector<PairBound> pair_bounds;
    // (lo, hi): Q(lo) <= Q(hi); hi is the right or down neighbor of lo
    std::vector<std::pair<std::size_t, std::size_t>> monotone;
};

// Box bounds come from reflections of the two sign classes: the even-class
// threshold 2*ct(b)*c binds when it is a positive even integer, the odd-class
// threshold 2*d_{beta(b)} + 2*ct(b)*c when a positive odd integer. A pair
// bound Q(b) <= Q(b') + kappa binds when kappa = ct_c(b) - ct_c(b') +- 2c is
// a positive integer and beta(b') = beta(b) - kappa (mod 2).
inline ConstraintSet resolve_constraints(const Bipartition& shape,
                                         const Params& par) {
    ConstraintSet cs;
    cs.shape = shape;
    cs.box_list = boxes(shape);
    const auto& bl = cs.box_list;
    const std::size_t n = bl.size();

    auto index_of = [&](int row, int col, int comp) -> int {
        for (std::size_t i = 0; i < n; ++i)
            if (bl[i].row == row && bl[i].col == col && bl[i].comp == comp)
                return static_cast<int>(i);
        return -1;
    };

    for (std::size_t i = 0; i < n; ++i) {
        int right = index_of(bl[i].row, bl[i].col + 1, bl[i].comp);
        int down = index_of(bl[i].row + 1, bl[i].col, bl[i].comp);
        if (right >= 0) cs.monotone.emplace_back(i, right);
        if (down >= 0) cs.monotone.emplace_back(i, down);
    }

    ParamScalar two{Rational(2)};
    for (std::size_t i = 0; i < n; ++i) {
        ParamScalar keven = ParamScalar(Rational(2 * content(bl[i]))) * par.c;
        if (keven.is_integer()) {
            BigInt k = keven.as_integer();
            if (k > 0 && k % 2 == 0) cs.box_bounds.push_back({i, to_int(k)});
        }
        ParamScalar kodd = two * par.d_alt(bl[i].comp) + keven;
        if (kodd.is_integer()) {
            BigInt k = kodd.as_integer();
            if (k > 0 && k % 2 != 0) cs.box_bounds.push_back({i, to_int(k)});
        }
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            ParamScalar base =
                par.charged_content(bl[i]) - par.charged_content(bl[j]);
            for (int sign : {+1, -1}) {
                ParamScalar kappa = base + ParamScalar(Rational(2 * sign)) * par.c;
                if (!kappa.is_integer()) continue;
                BigInt kb = kappa.as_integer();
                if (kb <= 0) continue;
                long long k = to_int(kb);
                int want = static_cast<int>(((bl[i].comp - k) % 2 + 2) % 2);
                if (bl[j].comp % 2 != want) continue;
                cs.pair_bounds.push_back({i, j, k});
            }
        }
    return cs;
}

// Least upper bounds per box implied by box bounds, pair bounds, and row and
// column monotonicity. A box with no implied bound makes the filling set
// infinite.
inline std::vector<long long> upper_bounds(const ConstraintSet& cs) {
    const long long INF = std::numeric_limits<long long>::max() / 4;
    const std::size_t n = cs.box_list.size();
    std::vector<long long> ub(n, INF);
    for (const auto& b : cs.box_bounds)
        ub[b.box] = std::min(ub[b.box], b.bound - 1);
    for (std::size_t round = 0; round <= n; ++round) {
        bool changed = false;
        for (const auto& p : cs.pair_bounds)
            if (ub[p.other] < INF && ub[p.other] + p.kappa < ub[p.box]) {
                ub[p.box] = ub[p.other] + p.kappa;
                changed = true;
            }
        for (const auto& [lo, hi] : cs.monotone)
            if (ub[hi] < ub[lo]) {
                ub[lo] = ub[hi];
                changed = true;
            }
        if (!changed) break;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (ub[i] >= INF)
            throw unbounded_error("box " + to_string(cs.box_list[i]) +
                                  " admits arbitrarily large values");
    return ub;
}

// All fillings: nonnegative integers, weakly increasing along rows and
// columns, satisfying every box and pair bound.
inline std::vector<QFilling> enumerate_tab(const ConstraintSet& cs,
                                           std::size_t cap = 2000000) {
    const std::size_t n = cs.box_list.size();
    std::vector<QFilling> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::vector<long long> ub = upper_bounds(cs);

    std::vector<std::vector<std::size_t>> mono_in(n);
    for (const auto& [lo, hi] : cs.monotone) mono_in[hi].push_back(lo);
    // v_box <= Q[other] + kappa, checked at the later of the two boxes
    std::vector<std::vector<std::pair<std::size_t, long long>>> ub_at(n), lb_at(n);
    for (const auto& p : cs.pair_bounds) {
        if (p.other < p.box)
            ub_at[p.box].emplace_back(p.other, p.kappa);
        else
            lb_at[p.other].emplace_back(p.box, p.kappa);
    }

    QFilling q(n, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            out.push_back(q);
            if (out.size() > cap)
                throw limit_error("filling enumeration exceeded cap of " +
                                  std::to_string(cap));
            return;
        }
        long long lo = 0, hi = ub[i];
        for (std::size_t j : mono_in[i]) lo = std::max(lo, (long long)q[j]);
        for (const auto& [j, k] : lb_at[i]) lo = std::max(lo, (long long)q[j] - k);
        for (const auto& [j, k] : ub_at[i]) hi = std::min(hi, (long long)q[j] + k);
        for (long long v = lo; v <= hi; ++v) {
            q[i] = static_cast<int>(v);
            self(self, i + 1);
        }
        q[i] = 0;
    };
    rec(rec, 0);
    return out;
}

// Membership test for a single filling against the full constraint set.
inline bool satisfies_constraints(const ConstraintSet& cs, const QFilling& q) {
    if (q.size() != cs.box_list.size()) return false;
    for (int v : q)
        if (v < 0) return false;
    for (const auto& [lo, hi] : cs.monotone)
        if (q[lo] > q[hi]) return false;
    for (const auto& b : cs.box_bounds)
        if (q[b.box] >= b.bound) return false;
    for (const auto& p : cs.pair_bounds)
        if (static_cast<long long>(q[p.box]) >
            static_cast<long long>(q[p.other]) + p.kappa)
            return false;
    return true;
}

// A filling is generic when every pair bound holds strictly.
inline bool is_generic(const ConstraintSet& cs, const QFilling& q) {
    for (const auto& p : cs.pair_bounds)
        if (static_cast<long long>(q[p.box]) ==
            static_cast<long long>(q[p.other]) + p.kappa)
            return false;
    return true;
}

inline long long filling_degree(const QFilling& q) {
    long long s = 0;
    for (int v : q) s += v;
    return s;
}

// Forced entry-order relations: (i, j) means P(box i) > P(box j). Forced when
// boxes are componentwise comparable with equal Q, or a pair bound is tight.
inline std::vector<std::pair<std::size_t, std::size_t>> p_forced_edges(
    const ConstraintSet& cs, const QFilling& q) {
    std::set<std::pair<std::size_t, std::size_t>> edges;
    const auto& bl = cs.box_list;
    for (std::size_t i = 0; i < bl.size(); ++i)
        for (std::size_t j = 0; j < bl.size(); ++j) {
            if (i == j) continue;
            if (box_leq(bl[i], bl[j]) && q[i] == q[j]) edges.insert({i, j});
        }
    for (const auto& p : cs.pair_bounds)
        if (static_cast<long long>(q[p.box]) ==
            static_cast<long long>(q[p.other]) + p.kappa)
            edges.insert({p.box, p.other});
    return {edges.begin(), edges.end()};
}

// Number of bijections P: boxes -> {1..n} respecting all forced relations.
// Bitmask dynamic program; n caps at 20 so counts stay within 64 bits.
inline unsigned long long count_linear_extensions(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    if (n > 20)
        throw limit_error("entry-order counting caps at 20 boxes, got " +
                          std::to_string(n));
    if (n == 0) return 1;
    std::vector<std::uint32_t> must(n, 0);
    for (const auto& [i, j] : edges) must[i] |= std::uint32_t{1} << j;
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<unsigned long long> dp(full + 1, 0);
    dp[0] = 1;
    for (std::size_t mask = 0; mask < full; ++mask) {
        if (!dp[mask]) continue;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) continue;
            if ((must[i] & ~static_cast<std::uint32_t>(mask)) != 0) continue;
            dp[mask | (std::size_t{1} << i)] += dp[mask];
        }
    }
    if (dp[full] == 0)
        throw constraint_error("forced entry-order relations contain a cycle");
    return dp[full];
}

// Deterministic representative: assign 1..n, always to the lowest-index box
// whose forced-smaller boxes are all placed. P[i] is the value at box i.
inline std::vector<int> canonical_p(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::uint32_t> must(n, 0);
    for (const auto& [i, j] : edges) must[i] |= std::uint32_t{1} << j;
    std::vector<int> P(n, 0);
    std::uint32_t placed = 0;
    for (std::size_t v = 1; v <= n; ++v) {
        bool found = false;
        for (std::size_t i = 0; i < n && !found; ++i) {
            if (placed & (std::uint32_t{1} << i)) continue;
            if ((must[i] & ~placed) != 0) continue;
            P[i] = static_cast<int>(v);
            placed |= std::uint32_t{1} << i;
            found = true;
        }
        if (!found)
            throw constraint_error("forced entry-order relations contain a cycle");
    }
    return P;
}

inline std::vector<std::vector<int>> all_linear_extensions(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
    std::size_t cap = 200000) {
    std::vector<std::uint32_t> must(n, 0);
    for (const auto& [i, j] : edges) must[i] |= std::uint32_t{1} << j;
    std::vector<std::vector<int>> out;
    std::vector<int> P(n, 0);
    auto rec = [&](auto&& self, std::size_t v, std::uint32_t placed) -> void {
        if (v > n) {
            out.push_back(P);
            if (out.size() > cap)
                throw limit_error("entry-order enumeration exceeded cap");
            return;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (placed & (std::uint32_t{1} << i)) continue;
            if ((must[i] & ~placed) != 0) continue;
            P[i] = static_cast<int>(v);
            self(self, v + 1, placed | (std::uint32_t{1} << i));
            P[i] = 0;
        }
    };
    rec(rec, 1, 0);
    return out;
}

// Eigenvalue data read off along increasing entry values: the box with
// P(b) = i contributes a_i and a target list. With q = Q(b), beta = beta(b):
//   q even: a = q + 1 - 2 d_beta - 2 ct(b) c, list (beta - q) mod 2
//   q odd:  a = q + 1 - 2 ct(b) c
struct WeightEntry {
    ParamScalar a;
    int list = 0;
};

inline std::vector<WeightEntry> weight_sequence(const Bipartition& shape,
                                                const Params& par,
                                                const QFilling& q,
                                                const std::vector<int>& P) {
    auto bl = boxes(shape);
    const std::size_t n = bl.size();
    std::vector<std::size_t> box_at(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        box_at[static_cast<std::size_t>(P[i])] = i;
    std::vector<WeightEntry> out;
    out.reserve(n);
    for (std::size_t v = 1; v <= n; ++v) {
        const BBox& b = bl[box_at[v]];
        int qv = q[box_at[v]];
        ParamScalar a = ParamScalar(Rational(qv + 1)) -
                        ParamScalar(Rational(2 * content(b))) * par.c;
        if (qv % 2 == 0) a -= ParamScalar(Rational(2)) * par.d_alt(b.comp);
        out.push_back({std::move(a), ((b.comp - qv) % 2 + 2) % 2});
    }
    return out;
}

// Cell content carried by each weight entry: a / (2c).
inline std::vector<ParamScalar> diagram_contents(
    const Params& par, const std::vector<WeightEntry>& ws) {
    ParamScalar twoc = ParamScalar(Rational(2)) * par.c;
    std::vector<ParamScalar> out;
    out.reserve(ws.size());
    for (const auto& w : ws) out.push_back(w.a / twoc);
    return out;
}

// Total dimension: sum over fillings of the number of admissible entry orders.
inline BigInt module_dimension(const ConstraintSet& cs,
                               const std::vector<QFilling>& fillings) {
    BigInt total = 0;
    for (const auto& q : fillings)
        total += count_linear_extensions(cs.box_list.size(), p_forced_edges(cs, q));
    return total;
}

inline BigInt module_dimension(const ConstraintSet& cs) {
    return module_dimension(cs, enumerate_tab(cs));
}

}  // namespace coinv
