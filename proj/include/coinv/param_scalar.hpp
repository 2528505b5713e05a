#pragma once

#include <cctype>
#include <iosfwd>
#include <string>
#include <utility>

#include "polynomial.hpp"

namespace coinv {

// Element of the field of rational functions in one indeterminate t over
// the rationals.  Stored as num/den with den monic and gcd(num, den) = 1.
// Plain rationals embed as constant fractions.
class ParamScalar {
public:
    ParamScalar() : num_(), den_(Rational(1)) {}
    ParamScalar(const Rational& r) : num_(r), den_(Rational(1)) {}
    ParamScalar(int n) : ParamScalar(Rational(n)) {}
    ParamScalar(const BigInt& n) : ParamScalar(Rational(n)) {}
    ParamScalar(UniPoly p) : num_(std::move(p)), den_(Rational(1)) {}
    ParamScalar(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static ParamScalar tau() { return ParamScalar(UniPoly::var()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const { return den_ == UniPoly(1) && num_.is_constant(); }

    Rational as_rational() const {
        if (!is_rational())
            throw domain_error("not a constant: " + to_string());
        return num_.coeff(0);
    }

    bool is_integer() const { return is_rational() && num_.coeff(0).is_integer(); }

    BigInt as_integer() const {
        if (!is_integer())
            throw domain_error("not an integer: " + to_string());
        return num_.coeff(0).num();
    }

    BigInt as_positive_integer() const {
        BigInt v = as_integer();
        if (v <= 0)
            throw domain_error("not a positive integer: " + to_string());
        return v;
    }

    ParamScalar operator-() const {
        ParamScalar r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
        return ParamScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) {
        return a + (-b);
    }
    friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
        return ParamScalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) {
        if (b.is_zero())
            throw division_by_zero("field division by zero");
        return ParamScalar(a.num_ * b.den_, a.den_ * b.num_);
    }
    ParamScalar& operator+=(const ParamScalar& o) { return *this = *this + o; }
    ParamScalar& operator-=(const ParamScalar& o) { return *this = *this - o; }
    ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }
    ParamScalar& operator/=(const ParamScalar& o) { return *this = *this / o; }

    friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ParamScalar& a, const ParamScalar& b) { return !(a == b); }

    // Deterministic total order for canonical sorting (not a field order).
    static int compare(const ParamScalar& a, const ParamScalar& b) {
        auto cmp_poly = [](const UniPoly& p, const UniPoly& q) {
            if (p.degree() != q.degree())
                return p.degree() < q.degree() ? -1 : 1;
            for (int i = p.degree(); i >= 0; --i) {
                if (p.coeff(i) != q.coeff(i))
                    return p.coeff(i) < q.coeff(i) ? -1 : 1;
            }
            return 0;
        };
        if (int c = cmp_poly(a.den_, b.den_); c != 0)
            return c;
        return cmp_poly(a.num_, b.num_);
    }

    // "p/q" with integer-coefficient polynomials in the literal t,
    // e.g. "5/2", "t", "(7-2t)/2", "-2/t".
    std::string to_string() const {
        UniPoly n = num_, d = den_;
        BigInt scale = 1;
        for (const UniPoly* p : {&n, &d})
            for (const Rational& c : p->coeffs())
                scale = boost::multiprecision::lcm(scale, c.den());
        n *= UniPoly(Rational(scale));
        d *= UniPoly(Rational(scale));
        BigInt content = 0;
        for (const UniPoly* p : {&n, &d})
            for (const Rational& c : p->coeffs())
                content = boost::multiprecision::gcd(content, c.num());
        if (content > 1) {
            n = n / UniPoly(Rational(content));
            d = d / UniPoly(Rational(content));
        }
        if (d == UniPoly(1))
            return poly_to_string(n);
        std::string ns = poly_to_string(n);
        std::string ds = poly_to_string(d);
        if (term_count(n) > 1)
            ns = "(" + ns + ")";
        if (term_count(d) > 1 || d.degree() > 0)
            ds = "(" + ds + ")";
        if (d.degree() > 0 && term_count(d) == 1 && d.coeff(d.degree()) == Rational(1))
            ds = poly_to_string(d); // bare power like t or t^2
        return ns + "/" + ds;
    }

    // Parses expressions in t with integer literals and + - * / ^ ( ).
    // Juxtaposition multiplies: "2t" is 2*t.  "5/2-t" parses as (5/2)-t.
    static ParamScalar parse(const std::string& s) {
        Parser p{s, 0};
        ParamScalar v = p.expr();
        p.skip_ws();
        if (p.pos != s.size())
            throw parse_error("trailing input in parameter expression: '" + s + "'");
        return v;
    }

    friend std::ostream& operator<<(std::ostream& os, const ParamScalar& p);

private:
    void normalize() {
        if (den_.is_zero())
            throw division_by_zero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = UniPoly(1);
            return;
        }
        UniPoly g = UniPoly::gcd(num_, den_);
        num_ = num_ / g;
        den_ = den_ / g;
        Rational lead = den_.leading();
        num_ = num_ * UniPoly(Rational(1) / lead);
        den_ = den_ * UniPoly(Rational(1) / lead);
    }

    static int term_count(const UniPoly& p) {
        int c = 0;
        for (int i = 0; i <= p.degree(); ++i)
            if (!p.coeff(i).is_zero())
                ++c;
        return c;
    }

    static std::string poly_to_string(const UniPoly& p) {
        if (p.is_zero())
            return "0";
        std::string out;
        for (int i = 0; i <= p.degree(); ++i) {
            Rational c = p.coeff(i);
            if (c.is_zero())
                continue;
            std::string mag;
            Rational a = c.sign() < 0 ? -c : c;
            if (i == 0) {
                mag = a.to_string();
            } else {
                std::string pow = (i == 1) ? "t" : "t^" + std::to_string(i);
                mag = (a == Rational(1)) ? pow : a.to_string() + pow;
            }
            if (out.empty())
                out = (c.sign() < 0 ? "-" : "") + mag;
            else
                out += (c.sign() < 0 ? "-" : "+") + mag;
        }
        return out;
    }

    struct Parser {
        const std::string& s;
        std::size_t pos;

        void skip_ws() {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
                ++pos;
        }
        bool peek_primary() {
            skip_ws();
            if (pos >= s.size())
                return false;
            char c = s[pos];
            return c == 't' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
        }
        ParamScalar expr() {
            skip_ws();
            bool neg = false;
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                neg = s[pos] == '-';
                ++pos;
            }
            ParamScalar v = term();
            if (neg)
                v = -v;
            for (;;) {
                skip_ws();
                if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-'))
                    return v;
                char op = s[pos++];
                ParamScalar r = term();
                v = (op == '+') ? v + r : v - r;
            }
        }
        ParamScalar term() {
            ParamScalar v = factor();
            for (;;) {
                skip_ws();
                if (pos < s.size() && (s[pos] == '*' || s[pos] == '/')) {
                    char op = s[pos++];
                    ParamScalar r = factor();
                    v = (op == '*') ? v * r : v / r;
                } else if (peek_primary()) {
                    v = v * factor();
                } else {
                    return v;
                }
            }
        }
        ParamScalar factor() {
            ParamScalar v = primary();
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                skip_ws();
                std::size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                    ++pos;
                if (start == pos)
                    throw parse_error("exponent expected in '" + s + "'");
                unsigned long e = std::stoul(s.substr(start, pos - start));
                ParamScalar r(1);
                for (unsigned long i = 0; i < e; ++i)
                    r *= v;
                v = r;
            }
            return v;
        }
        ParamScalar primary() {
            skip_ws();
            if (pos >= s.size())
                throw parse_error("unexpected end of parameter expression: '" + s + "'");
            char c = s[pos];
            if (c == 't') {
                ++pos;
                return ParamScalar::tau();
            }
            if (c == '(') {
                ++pos;
                ParamScalar v = expr();
                skip_ws();
                if (pos >= s.size() || s[pos] != ')')
                    throw parse_error("missing ')' in '" + s + "'");
                ++pos;
                return v;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                    ++pos;
                return ParamScalar(Rational(BigInt(s.substr(start, pos - start))));
            }
            throw parse_error(std::string("unexpected character '") + c + "' in '" + s + "'");
        }
    };

    UniPoly num_, den_;
};

inline std::ostream& operator<<(std::ostream& os, const ParamScalar& p) {
    return os << p.to_string();
}

} // namespace coinv
