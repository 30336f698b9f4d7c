#pragma once

#include <array>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "g2abv/errors.hpp"

namespace g2abv {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view s);

// A root of unity exp(2 pi i k/n), stored as the reduced fraction k/n in [0,1).
class RootOfUnity {
public:
    RootOfUnity() : frac_(0) {}
    RootOfUnity(long k, long n);
    static RootOfUnity from_fraction(const Rational& f);

    const Rational& fraction() const { return frac_; }
    long order() const;
    long exponent() const;  // numerator of the reduced fraction
    bool is_one() const { return frac_ == 0; }

    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity inverse() const;
    RootOfUnity pow(long k) const;

    bool operator==(const RootOfUnity& o) const { return frac_ == o.frac_; }
    bool operator!=(const RootOfUnity& o) const { return !(*this == o); }
    bool operator<(const RootOfUnity& o) const { return frac_ < o.frac_; }

    std::string to_string() const;

private:
    Rational frac_;
};

// Element of Q(zeta) with zeta a primitive 12th root of unity, on the basis
// 1, z, z^2, z^3 with z^4 = z^2 - 1.
class Cyclo {
public:
    Cyclo() = default;
    Cyclo(long v) { c_[0] = v; }
    Cyclo(const Rational& v) { c_[0] = v; }
    Cyclo(const Rational& a, const Rational& b, const Rational& c, const Rational& d)
        : c_{a, b, c, d} {}

    static Cyclo zeta_pow(long k);
    // Throws NotEmbeddable unless the order divides 12.
    static Cyclo embed(const RootOfUnity& u);

    const Rational& coeff(int i) const { return c_[i]; }

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator/(const Cyclo& o) const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    // Galois automorphism z -> z^j, j a unit mod 12.
    Cyclo galois(int j) const;
    Cyclo conj() const { return galois(11); }
    Cyclo inverse() const;

    bool is_zero() const;
    bool is_rational() const;
    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }
    bool operator<(const Cyclo& o) const;  // arbitrary total order, for containers

    std::string to_string() const;

private:
    std::array<Rational, 4> c_{};
};

Cyclo cyclo_arith(const Cyclo& x, const Cyclo& y, char op);
inline Cyclo cyclo_conj(const Cyclo& x) { return x.conj(); }
inline bool cyclo_eq(const Cyclo& x, const Cyclo& y) { return x == y; }

// u q^a for a formal q > 1.
class QValue {
public:
    QValue() = default;
    QValue(RootOfUnity u, Rational a) : unit_(std::move(u)), exp_(std::move(a)) {}
    static QValue q_pow(const Rational& a) { return QValue(RootOfUnity(), a); }
    static QValue one() { return QValue(); }
    static QValue parse(std::string_view s);

    const RootOfUnity& unit() const { return unit_; }
    const Rational& exponent() const { return exp_; }
    bool is_one() const { return unit_.is_one() && exp_ == 0; }

    QValue operator*(const QValue& o) const { return QValue(unit_ * o.unit_, exp_ + o.exp_); }
    QValue inverse() const { return QValue(unit_.inverse(), -exp_); }
    QValue pow(long k) const;

    bool operator==(const QValue& o) const { return unit_ == o.unit_ && exp_ == o.exp_; }
    bool operator!=(const QValue& o) const { return !(*this == o); }
    bool operator<(const QValue& o) const;

    std::string to_string() const;

private:
    RootOfUnity unit_;
    Rational exp_{0};
};

inline QValue qvalue_mul(const QValue& x, const QValue& y) { return x * y; }
inline QValue qvalue_pow(const QValue& x, long k) { return x.pow(k); }
inline bool qvalue_eq(const QValue& x, const QValue& y) { return x == y; }

}  // namespace g2abv
