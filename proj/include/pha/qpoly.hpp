#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "pha/error.hpp"

namespace pha {

// Exact rational number with arbitrary-precision integer parts.
using Rat = boost::multiprecision::cpp_rational;

namespace qpoly {

/// Dense univariate polynomial over Q in the indeterminate q.
/// Canonical form: no trailing zero coefficients (zero polynomial = empty).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rat& r);
    static Poly monomial(int degree, const Rat& coeff = Rat(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const Rat& lead() const;
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly monic() const; // divide by leading coefficient; zero stays zero

    std::string str(const std::string& var = "q") const;

private:
    void trim();
    std::vector<Rat> c_; // c_[i] is the coefficient of q^i
};

// Euclidean division over Q[q]: a = b*quot + rem with deg rem < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Monic greatest common divisor.
Poly gcd(Poly a, Poly b);

// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
struct ExtGcd {
    Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

// n-th cyclotomic polynomial, n >= 1. Cached; thread safe.
const Poly& cyclotomic(int n);

} // namespace qpoly
} // namespace pha
