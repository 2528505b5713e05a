#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <coinv/errors.hpp>
#include <coinv/linalg.hpp>

namespace coinv {

// Signed permutation w: e_i -> sign[i] * e_{perm[i]}.
struct SignedPerm {
    std::vector<int> perm;
    std::vector<int> sign;

    int rank() const { return static_cast<int>(perm.size()); }
    friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
};

inline SignedPerm identity_perm(int n) {
    SignedPerm w;
    w.perm.resize(n);
    w.sign.assign(n, 1);
    std::iota(w.perm.begin(), w.perm.end(), 0);
    return w;
}

inline SignedPerm compose(const SignedPerm& v, const SignedPerm& w) {
    const int n = v.rank();
    SignedPerm r;
    r.perm.resize(n);
    r.sign.resize(n);
    for (int i = 0; i < n; ++i) {
        r.perm[i] = v.perm[w.perm[i]];
        r.sign[i] = w.sign[i] * v.sign[w.perm[i]];
    }
    return r;
}

inline SignedPerm inverse(const SignedPerm& w) {
    const int n = w.rank();
    SignedPerm r;
    r.perm.resize(n);
    r.sign.resize(n);
    for (int i = 0; i < n; ++i) {
        r.perm[w.perm[i]] = i;
        r.sign[w.perm[i]] = w.sign[i];
    }
    return r;
}

inline std::vector<SignedPerm> all_signed_perms(int n) {
    if (n < 1) throw domain_error("rank must be positive");
    if (n > 4)
        throw limit_error("signed permutation enumeration caps at rank 4, got " +
                          std::to_string(n));
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<SignedPerm> out;
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            SignedPerm w;
            w.perm = p;
            w.sign.resize(n);
            for (int i = 0; i < n; ++i) w.sign[i] = (mask >> i) & 1 ? -1 : 1;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline int perm_sign(const SignedPerm& w) {
    const int n = w.rank();
    int s = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (w.perm[i] > w.perm[j]) s = -s;
    return s;
}

// The four linear characters: chi is the sign of the underlying permutation,
// chi_prime the product of the signs, determinant their product.
enum class BChar { trivial, chi, chi_prime, determinant };

inline constexpr std::array<BChar, 4> all_bchars{
    BChar::trivial, BChar::chi, BChar::chi_prime, BChar::determinant};

inline std::string to_string(BChar ch) {
    switch (ch) {
        case BChar::trivial: return "triv";
        case BChar::chi: return "chi";
        case BChar::chi_prime: return "chi_prime";
        default: return "det";
    }
}

inline int evaluate(BChar ch, const SignedPerm& w) {
    if (ch == BChar::trivial) return 1;
    int flips = 1;
    for (int s : w.sign) flips *= s;
    switch (ch) {
        case BChar::chi: return perm_sign(w);
        case BChar::chi_prime: return flips;
        default: return perm_sign(w) * flips;
    }
}

// Monomial in x_1..x_n, y_1..y_n by exponent vectors.
struct Monomial {
    std::vector<int> xe, ye;
    auto operator<=>(const Monomial&) const = default;
};

// w sends x_i to sign[i] x_{perm[i]} and y_i to sign[i] y_{perm[i]}.
inline std::pair<int, Monomial> act(const SignedPerm& w, const Monomial& m) {
    const int n = w.rank();
    Monomial r;
    r.xe.assign(n, 0);
    r.ye.assign(n, 0);
    int coef = 1;
    for (int i = 0; i < n; ++i) {
        r.xe[w.perm[i]] = m.xe[i];
        r.ye[w.perm[i]] = m.ye[i];
        if (w.sign[i] < 0 && (m.xe[i] + m.ye[i]) % 2 != 0) coef = -coef;
    }
    return {coef, r};
}

namespace detail {

template <typename Fn>
inline void compositions(int total, int parts, Fn&& fn) {
    std::vector<int> v(parts, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == parts - 1) {
            v[i] = left;
            fn(v);
            return;
        }
        for (int t = 0; t <= left; ++t) {
            v[i] = t;
            self(self, i + 1, left - t);
        }
    };
    if (parts == 0) {
        if (total == 0) fn(v);
        return;
    }
    rec(rec, 0, total);
}

}  // namespace detail

inline std::vector<Monomial> monomials_of_bidegree(int n, int a, int b) {
    std::vector<std::vector<int>> xs, ys;
    detail::compositions(a, n, [&](const std::vector<int>& v) { xs.push_back(v); });
    detail::compositions(b, n, [&](const std::vector<int>& v) { ys.push_back(v); });
    std::vector<Monomial> out;
    out.reserve(xs.size() * ys.size());
    for (const auto& x : xs)
        for (const auto& y : ys) out.push_back({x, y});
    return out;
}

// Unnormalized Reynolds image of m, as coefficients over the index map.
inline std::vector<BigInt> reynolds_row(const std::vector<SignedPerm>& group,
                                        const Monomial& m,
                                        const std::map<Monomial, int>& index) {
    std::vector<BigInt> row(index.size(), 0);
    for (const auto& w : group) {
        auto [c, im] = act(w, m);
        row[index.at(im)] += c;
    }
    return row;
}

// Character projector image (sum of ch(w) * w(m)) over the index map.
inline std::vector<BigInt> projector_row(const std::vector<SignedPerm>& group,
                                         BChar ch, const Monomial& m,
                                         const std::map<Monomial, int>& index) {
    std::vector<BigInt> row(index.size(), 0);
    for (const auto& w : group) {
        auto [c, im] = act(w, m);
        row[index.at(im)] += c * evaluate(ch, w);
    }
    return row;
}

struct BidegreeDims {
    int a = 0, b = 0;
    long long dim = 0;
    std::array<long long, 4> iso{};
};

struct GradedReport {
    int n = 0;
    bool complete = false;
    int top_degree = 0;
    std::vector<BidegreeDims> entries;

    long long total_dim() const {
        long long s = 0;
        for (const auto& e : entries) s += e.dim;
        return s;
    }

    long long isotypic_dim(BChar c) const {
        long long s = 0;
        for (const auto& e : entries) s += e.iso[static_cast<int>(c)];
        return s;
    }

    std::map<int, long long> euler_isotypic(BChar c) const {
        std::map<int, long long> out;
        for (const auto& e : entries) {
            long long d = e.iso[static_cast<int>(c)];
            if (d != 0) out[e.a - e.b] += d;
        }
        return out;
    }

    long long degree_dim(int total) const {
        long long s = 0;
        for (const auto& e : entries)
            if (e.a + e.b == total) s += e.dim;
        return s;
    }
};

namespace detail {

class QuotientGrader {
public:
    explicit QuotientGrader(int n) : n_(n), group_(all_signed_perms(n)) {}

    // Deduplicated nonzero Reynolds rows spanning the invariants of (e, f).
    const std::vector<std::vector<BigInt>>& invariant_rows(int e, int f) {
        auto key = std::make_pair(e, f);
        auto it = inv_cache_.find(key);
        if (it != inv_cache_.end()) return it->second;
        std::vector<Monomial> basis = monomials_of_bidegree(n_, e, f);
        std::map<Monomial, int> index;
        for (std::size_t i = 0; i < basis.size(); ++i)
            index[basis[i]] = static_cast<int>(i);
        std::set<std::vector<BigInt>> rows;
        for (const auto& m : basis) {
            std::vector<BigInt> row = reynolds_row(group_, m, index);
            bool zero = true;
            for (const auto& v : row)
                if (v != 0) zero = false;
            if (zero) continue;
            for (const auto& v : row) {
                if (v > 0) break;
                if (v < 0) {
                    for (auto& x : row) x = -x;
                    break;
                }
            }
            rows.insert(std::move(row));
        }
        return inv_cache_.emplace(key, std::vector<std::vector<BigInt>>(
                                           rows.begin(), rows.end()))
            .first->second;
    }

    BidegreeDims bidegree(int a, int b) {
        std::vector<Monomial> basis = monomials_of_bidegree(n_, a, b);
        std::map<Monomial, int> index;
        for (std::size_t i = 0; i < basis.size(); ++i)
            index[basis[i]] = static_cast<int>(i);

        IntMatrix ideal;
        for (int e = 0; e <= a; ++e)
            for (int f = 0; f <= b; ++f) {
                if (e + f == 0 || (e + f) % 2 != 0) continue;
                const auto& inv = invariant_rows(e, f);
                if (inv.empty()) continue;
                std::vector<Monomial> lower = monomials_of_bidegree(n_, e, f);
                std::vector<Monomial> shifts = monomials_of_bidegree(n_, a - e, b - f);
                for (const auto& g : inv)
                    for (const auto& s : shifts) {
                        std::vector<BigInt> row(basis.size(), 0);
                        for (std::size_t i = 0; i < lower.size(); ++i) {
                            if (g[i] == 0) continue;
                            Monomial prod = lower[i];
                            for (int t = 0; t < n_; ++t) {
                                prod.xe[t] += s.xe[t];
                                prod.ye[t] += s.ye[t];
                            }
                            row[index.at(prod)] += g[i];
                        }
                        ideal.push_back(std::move(row));
                    }
            }

        std::size_t ideal_rank = rank_checked(ideal);
        BidegreeDims out;
        out.a = a;
        out.b = b;
        out.dim = static_cast<long long>(basis.size()) -
                  static_cast<long long>(ideal_rank);
        for (BChar ch : all_bchars) {
            IntMatrix joint = ideal;
            for (const auto& m : basis)
                joint.push_back(projector_row(group_, ch, m, index));
            out.iso[static_cast<int>(ch)] =
                static_cast<long long>(rank_checked(joint)) -
                static_cast<long long>(ideal_rank);
        }
        return out;
    }

private:
    int n_;
    std::vector<SignedPerm> group_;
    std::map<std::pair<int, int>, std::vector<std::vector<BigInt>>> inv_cache_;
};

}  // namespace detail

// Graded dimensions of the quotient by the ideal of positive-degree
// invariants, total degree by total degree, stopping at the first degree
// where the whole slice vanishes (the quotient is generated in degree one,
// so nothing survives beyond it).
inline GradedReport graded_quotient(int n, int max_degree = 32) {
    detail::QuotientGrader grader(n);
    GradedReport rep;
    rep.n = n;
    for (int total = 0; total <= max_degree; ++total) {
        std::vector<BidegreeDims> slice;
        long long slice_dim = 0;
        for (int a = total; a >= 0; --a) {
            slice.push_back(grader.bidegree(a, total - a));
            slice_dim += slice.back().dim;
        }
        if (total > 0 && slice_dim == 0) {
            rep.complete = true;
            rep.top_degree = total - 1;
            return rep;
        }
        for (auto& e : slice) rep.entries.push_back(std::move(e));
        rep.top_degree = total;
    }
    return rep;
}

struct EpsilonReport {
    GradedReport graded;
    long long principal = 0;
    long long dim = 0;
    long long eps = 0;
    long long det_dim = 0;
    long long chi_prime_dim = 0;
    long long eps_chi = 0;
};

inline EpsilonReport epsilon_report(int n, int max_degree = 32) {
    EpsilonReport r;
    r.graded = graded_quotient(n, max_degree);
    long long p = 1;
    for (int i = 0; i < n; ++i) p *= 2 * n + 1;
    r.principal = p;
    r.dim = r.graded.total_dim();
    r.eps = r.dim - r.principal;
    r.det_dim = r.graded.isotypic_dim(BChar::determinant);
    r.chi_prime_dim = r.graded.isotypic_dim(BChar::chi_prime);
    r.eps_chi = r.chi_prime_dim - (n + 1);
    return r;
}

}  // namespace coinv
