#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>

#include "errors.hpp"

namespace coinv {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational number.  Always stored reduced with a
// positive denominator; zero is 0/1.  Construction from p/0 throws.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<boost::multiprecision::cpp_int>(n)) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw division_by_zero("rational with zero denominator");
        if (den < 0)
            v_ = boost::multiprecision::cpp_rational(-num, -den);
        else
            v_ = boost::multiprecision::cpp_rational(num, den);
    }

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return den() == 1; }

    // The integer value; throws if not an integer.
    BigInt as_integer() const {
        if (!is_integer())
            throw domain_error("not an integer: " + to_string());
        return num();
    }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw division_by_zero("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    int sign() const { return v_ == 0 ? 0 : (v_ < 0 ? -1 : 1); }

    // "p" for integers, "p/q" otherwise.
    std::string to_string() const {
        std::string s = num().str();
        if (den() != 1)
            s += "/" + den().str();
        return s;
    }

    // Parses "p" or "p/q" with optional leading sign.
    static Rational parse(const std::string& s) {
        auto bad = [&] { return parse_error("bad rational literal: '" + s + "'"); };
        std::size_t slash = s.find('/');
        try {
            if (slash == std::string::npos)
                return Rational(BigInt(s));
            BigInt n(s.substr(0, slash));
            BigInt d(s.substr(slash + 1));
            if (d == 0)
                throw division_by_zero("rational with zero denominator");
            return Rational(n, d);
        } catch (const std::runtime_error& e) {
            if (dynamic_cast<const error*>(&e))
                throw;
            throw bad();
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    boost::multiprecision::cpp_rational v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline int to_int(const BigInt& v) {
    return static_cast<int>(v.convert_to<long long>());
}

} // namespace coinv
