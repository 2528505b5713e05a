#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace coinv {

// Univariate polynomial over Rational.  Coefficients are stored dense in
// ascending power order with no trailing zeros; the zero polynomial has an
// empty coefficient vector and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }
    UniPoly(int c) : UniPoly(Rational(c)) {}
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static UniPoly var() { return UniPoly({Rational(0), Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size()))
            return Rational(0);
        return c_[static_cast<std::size_t>(i)];
    }
    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational evaluate(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + c_[i];
        return acc;
    }

    UniPoly operator-() const {
        std::vector<Rational> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            r[i] = -c_[i];
        return UniPoly(std::move(r));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero())
            return UniPoly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Euclidean division; throws on zero divisor.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero())
            throw division_by_zero("polynomial division by zero");
        UniPoly q, r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            Rational f = r.leading() / b.leading();
            std::vector<Rational> tc(static_cast<std::size_t>(shift) + 1, Rational(0));
            tc.back() = f;
            UniPoly t(std::move(tc));
            q += t;
            r -= t * b;
        }
        return {q, r};
    }
    friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
    friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

    UniPoly monic() const {
        if (is_zero())
            return *this;
        std::vector<Rational> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            r[i] = c_[i] / c_.back();
        return UniPoly(std::move(r));
    }

    // Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
    static UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            UniPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<Rational> c_;
};

} // namespace coinv
