#pragma once

#include <numeric>
#include <string>

#include <coinv/param_scalar.hpp>
#include <coinv/partitions.hpp>

namespace coinv {

// Reflection-group parameters (c, d); c must be nonzero for charged contents
// to separate diagonals.
struct Params {
    ParamScalar c;
    ParamScalar d;

    Params(ParamScalar c_, ParamScalar d_) : c(std::move(c_)), d(std::move(d_)) {
        if (c.is_zero()) throw domain_error("parameter c must be nonzero");
    }

    // d_0 = d, d_1 = -d
    ParamScalar d_alt(int comp) const { return comp == 0 ? d : -d; }

    // ct_c(b) = d_{comp(b)} + 2 * content(b) * c
    ParamScalar charged_content(const BBox& b) const {
        return d_alt(b.comp) + ParamScalar(Rational(2 * content(b))) * c;
    }
};

// One-row module of size n at c = d = (2n+1)/(2n).
inline Params gordon_params(int n) {
    if (n < 1) throw domain_error("rank must be positive");
    ParamScalar v{Rational(2 * n + 1, 2 * n)};
    return Params(v, v);
}

inline Bipartition gordon_shape(int n) {
    if (n < 1) throw domain_error("rank must be positive");
    return Bipartition({n}, {});
}

// Rectangle (a^b) at c = t and d tuned so the far corner's odd box bound
// lands on target: 2d + 2*content(corner)*t = target.
inline Params rect_params(const Partition& shape, int target) {
    validate_partition(shape);
    if (shape.empty() || !is_rectangle(shape))
        throw domain_error("shape must be a nonempty rectangle");
    if (target <= 0 || target % 2 == 0)
        throw domain_error("target must be a positive odd integer");
    int corner_ct = shape[0] - static_cast<int>(shape.size());
    ParamScalar t = ParamScalar::tau();
    ParamScalar d = ParamScalar(Rational(target, 2)) -
                    ParamScalar(Rational(corner_ct)) * t;
    return Params(t, d);
}

// n mod 4 == 0 -> n/2 + 1; n mod 4 == 2 -> n/2 + 2; n odd -> (n+1)/2.
// Always coprime to n.
inline int hook_k(int n) {
    if (n < 2) throw domain_error("rank must be at least 2");
    if (n % 2 == 1) return (n + 1) / 2;
    if (n % 4 == 0) return n / 2 + 1;
    return n / 2 + 2;
}

// Hook (k, 1^(n-k)) at c = k/n, d = 3/2 + (n-k)k/n; requires gcd(k, n) = 1.
inline Params hook_params(int n, int k) {
    if (n < 2) throw domain_error("rank must be at least 2");
    if (k < 1 || k > n) throw domain_error("hook arm must satisfy 1 <= k <= n");
    if (std::gcd(k, n) != 1)
        throw domain_error("hook arm " + std::to_string(k) +
                           " must be coprime to rank " + std::to_string(n));
    ParamScalar c{Rational(k, n)};
    ParamScalar d = ParamScalar(Rational(3, 2)) +
                    ParamScalar(Rational(static_cast<long long>(n - k) * k, n));
    return Params(c, d);
}

inline Params hook_params(int n) { return hook_params(n, hook_k(n)); }

inline Bipartition hook_shape(int n, int k) {
    if (n < 2) throw domain_error("rank must be at least 2");
    if (k < 1 || k > n) throw domain_error("hook arm must satisfy 1 <= k <= n");
    Partition p{k};
    for (int i = 0; i < n - k; ++i) p.push_back(1);
    return Bipartition(std::move(p), {});
}

inline Bipartition hook_shape(int n) { return hook_shape(n, hook_k(n)); }

}  // namespace coinv
