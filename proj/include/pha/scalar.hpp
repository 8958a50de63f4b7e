#pragma once

#include <string>
#include <variant>

#include "pha/qpoly.hpp"

namespace pha {

enum class FieldKind { Rational, FormalQ, Cyclotomic };

class Scalar;

/// Descriptor of the active coefficient field.
///
/// Three exact fields are supported:
///   - rationals Q,
///   - the field Q(q) of rational functions in a formal q (this is the
///     fraction field of Laurent polynomials, so q is invertible),
///   - the cyclotomic field Q[q]/Phi_N(q), q a primitive N-th root of unity.
///
/// All Scalars are created through a Field so that mixed-field arithmetic
/// is impossible by construction and flagged if attempted.
class Field {
public:
    static Field rationals() { return Field(FieldKind::Rational, 0); }
    static Field formal_q() { return Field(FieldKind::FormalQ, 0); }
    static Field cyclotomic(int n);

    FieldKind kind() const { return kind_; }
    int cyclotomic_order() const { return n_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar integer(long long v) const;
    Scalar from_rat(const Rat& r) const;
    Scalar q_pow(long long e) const; // q^e; error for e != 0 over the rationals
    Scalar parse(const std::string& text) const;

    bool operator==(const Field&) const = default;
    std::string str() const;

private:
    Field(FieldKind k, int n) : kind_(k), n_(n) {}
    FieldKind kind_;
    int n_;
};

/// Immutable exact field element in canonical form. Equality of canonical
/// representations is equality in the field; there is no floating point.
class Scalar {
public:
    Scalar() : v_(Rat(0)) {} // rational zero

    FieldKind field_kind() const;
    int cyclotomic_order() const; // 0 unless cyclotomic

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const; // error on zero
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    friend class Field;

    struct RatFunc {
        qpoly::Poly num, den; // canonical: gcd(num,den)=1, den monic, den!=0
        bool operator==(const RatFunc&) const = default;
    };
    struct Cyc {
        int n = 0;            // cyclotomic order
        qpoly::Poly rep;      // reduced modulo Phi_n, deg < deg Phi_n
        bool operator==(const Cyc&) const = default;
    };

    explicit Scalar(Rat r) : v_(std::move(r)) {}
    explicit Scalar(RatFunc f) : v_(std::move(f)) {}
    explicit Scalar(Cyc c) : v_(std::move(c)) {}

    static RatFunc make_ratfunc(qpoly::Poly num, qpoly::Poly den);
    static Cyc make_cyc(int n, const qpoly::Poly& raw);
    static void require_same(const Scalar& a, const Scalar& b);

    std::variant<Rat, RatFunc, Cyc> v_;
};

} // namespace pha
