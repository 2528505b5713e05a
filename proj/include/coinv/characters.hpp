#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <coinv/reconstruct.hpp>
#include <coinv/tableaux.hpp>

namespace coinv {

enum class LinearChar { determinant, chi };

inline std::string to_string(LinearChar ch) {
    return ch == LinearChar::determinant ? "det" : "chi";
}

// Value parity the filling must have on each box of the given component.
inline int required_parity(LinearChar ch, int comp) {
    int p = ch == LinearChar::determinant ? comp + 1 : comp;
    return ((p % 2) + 2) % 2;
}

// The list whose diagram must be a vertical strip for the character to occur.
inline int required_list(LinearChar ch) {
    return ch == LinearChar::determinant ? 1 : 0;
}

inline bool is_row_strict(const ConstraintSet& cs, const QFilling& q) {
    const auto& bl = cs.box_list;
    for (const auto& [lo, hi] : cs.monotone)
        if (bl[lo].row == bl[hi].row && bl[lo].comp == bl[hi].comp &&
            q[lo] >= q[hi])
            return false;
    return true;
}

// One candidate filling (right parity pattern, row-strict, inside the
// constraint set) together with how its occurrence was settled.
struct CandidateOutcome {
    QFilling q;
    bool generic = false;
    bool reconstructed = false;
    bool strip = false;
    bool occurs = false;
};

// Candidates for a linear character: fillings with the parity pattern of ch,
// strictly increasing along rows, satisfying every bound. A generic candidate
// occurs outright; a non-generic one occurs iff the diagram rebuilt from its
// weight sequence is a vertical strip on the character's list.
inline std::vector<CandidateOutcome> linear_candidates(const ConstraintSet& cs,
                                                       const Params& par,
                                                       LinearChar ch) {
    const std::size_t n = cs.box_list.size();
    std::vector<CandidateOutcome> out;
    if (n == 0) {
        out.push_back({{}, true, false, false, true});
        return out;
    }
    std::vector<long long> ub = upper_bounds(cs);

    std::vector<std::vector<std::pair<std::size_t, long long>>> mono_in(n);
    for (const auto& [lo, hi] : cs.monotone) {
        bool row = cs.box_list[lo].row == cs.box_list[hi].row &&
                   cs.box_list[lo].comp == cs.box_list[hi].comp;
        mono_in[hi].emplace_back(lo, row ? 1 : 0);
    }
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
            CandidateOutcome c;
            c.q = q;
            c.generic = is_generic(cs, q);
            if (c.generic) {
                c.occurs = true;
            } else {
                c.reconstructed = true;
                SkewTableau st = diagram_of_q(cs.shape, par, q);
                c.strip = st.shape().is_vertical_strip(required_list(ch));
                c.occurs = c.strip;
            }
            out.push_back(std::move(c));
            return;
        }
        long long lo = 0, hi = ub[i];
        for (const auto& [j, s] : mono_in[i])
            lo = std::max(lo, static_cast<long long>(q[j]) + s);
        for (const auto& [j, k] : lb_at[i])
            lo = std::max(lo, static_cast<long long>(q[j]) - k);
        for (const auto& [j, k] : ub_at[i])
            hi = std::min(hi, static_cast<long long>(q[j]) + k);
        int want = required_parity(ch, cs.box_list[i].comp);
        if (((lo % 2) + 2) % 2 != want) ++lo;
        for (long long v = lo; v <= hi; v += 2) {
            q[i] = static_cast<int>(v);
            self(self, i + 1);
        }
        q[i] = 0;
    };
    rec(rec, 0);
    return out;
}

struct LinearMult {
    long long generic = 0;
    long long total = 0;
};

inline LinearMult multiplicity_linear(const ConstraintSet& cs, const Params& par,
                                      LinearChar ch) {
    LinearMult m;
    for (const auto& c : linear_candidates(cs, par, ch)) {
        if (!c.occurs) continue;
        ++m.total;
        if (c.generic) ++m.generic;
    }
    return m;
}

// Piecewise lower bound for the chi-isotypic error at rank n.
inline long long piecewise_bound(int n) {
    long long m = n;
    if (n % 2 == 1) return (m - 1) * (m - 3) / 4;
    if (n % 4 == 0) return m * (m - 4) / 4;
    return m * (m - 6) / 4;
}

// Full statement: the piecewise bound improved at the two small even ranks
// where square shapes beat hooks.
inline long long theorem_bound(int n) {
    if (n == 4) return 1;
    if (n == 6) return 3;
    return piecewise_bound(n);
}

// Generic chi count 2+km from the hook (k,1^m), less the n+1 copies already
// accounted for at rank n.
inline long long hook_formula_bound(int n, int k) {
    return 2 + static_cast<long long>(k) * (n - k) - (n + 1);
}

struct BoundReport {
    int n = 0;
    std::string scenario;
    Bipartition shape;
    long long det_mult = 0;
    long long chi_generic = 0;
    long long chi_total = 0;
    bool coinvariant_type = false;
    long long eps_chi_lower = 0;
    long long theorem = 0;
};

inline BoundReport scenario_report(const Bipartition& shape, const Params& par,
                                   int n, std::string scenario) {
    ConstraintSet cs = resolve_constraints(shape, par);
    LinearMult det = multiplicity_linear(cs, par, LinearChar::determinant);
    LinearMult chi = multiplicity_linear(cs, par, LinearChar::chi);
    BoundReport r;
    r.n = n;
    r.scenario = std::move(scenario);
    r.shape = shape;
    r.det_mult = det.total;
    r.chi_generic = chi.generic;
    r.chi_total = chi.total;
    r.coinvariant_type = det.total == 1;
    r.eps_chi_lower = chi.total - (n + 1);
    r.theorem = theorem_bound(n);
    return r;
}

inline BoundReport gordon_report(int n) {
    return scenario_report(gordon_shape(n), gordon_params(n), n, "gordon");
}

inline BoundReport rect_report(const Partition& shape, int target) {
    Bipartition bp(shape, {});
    std::string name = "rect " + to_string(shape) + " t=" + std::to_string(target);
    return scenario_report(bp, rect_params(shape, target),
                           partition_size(shape), std::move(name));
}

inline BoundReport hook_report(int n, int k) {
    std::string name = "hook k=" + std::to_string(k);
    return scenario_report(hook_shape(n, k), hook_params(n, k), n,
                           std::move(name));
}

inline BoundReport hook_report(int n) { return hook_report(n, hook_k(n)); }

// Euler positions of the chi occurrences in the rank-n single-row module,
// centered so the lone determinant occurrence sits at zero.
inline std::map<int, long long> gordon_chi_euler_profile(int n) {
    ConstraintSet cs = resolve_constraints(gordon_shape(n), gordon_params(n));
    std::map<int, long long> out;
    long long center = static_cast<long long>(n) * n;
    for (const auto& c : linear_candidates(cs, gordon_params(n), LinearChar::chi))
        if (c.occurs) out[static_cast<int>(filling_degree(c.q) - center)] += 1;
    return out;
}

// Best scenario on record per rank.
inline BoundReport eps_chi_bound(int n) {
    if (n <= 3) return gordon_report(n);
    if (n == 4) return rect_report({2, 2}, 5);
    if (n == 6) return rect_report({3, 3}, 7);
    return hook_report(n);
}

}  // namespace coinv
