#include "pha/scalar.hpp"

#include <cctype>
#include <sstream>

namespace pha {

using qpoly::Poly;

// ---------------------------------------------------------------- Field

Field Field::cyclotomic(int n) {
    if (n < 2) throw Error("Field::cyclotomic: order must be >= 2");
    qpoly::cyclotomic(n); // validate and warm the cache
    return Field(FieldKind::Cyclotomic, n);
}

Scalar Field::zero() const { return integer(0); }
Scalar Field::one() const { return integer(1); }

Scalar Field::integer(long long v) const { return from_rat(Rat(v)); }

Scalar Field::from_rat(const Rat& r) const {
    switch (kind_) {
    case FieldKind::Rational: return Scalar(r);
    case FieldKind::FormalQ:
        return Scalar(Scalar::make_ratfunc(Poly::constant(r), Poly::constant(1)));
    case FieldKind::Cyclotomic:
        return Scalar(Scalar::make_cyc(n_, Poly::constant(r)));
    }
    throw Error("Field::from_rat: bad kind");
}

Scalar Field::q_pow(long long e) const {
    switch (kind_) {
    case FieldKind::Rational:
        if (e == 0) return one();
        throw Error("q_pow: q is not available over the rationals");
    case FieldKind::FormalQ:
        if (e >= 0)
            return Scalar(Scalar::make_ratfunc(Poly::monomial(static_cast<int>(e)),
                                               Poly::constant(1)));
        return Scalar(Scalar::make_ratfunc(Poly::constant(1),
                                           Poly::monomial(static_cast<int>(-e))));
    case FieldKind::Cyclotomic: {
        long long r = e % n_;
        if (r < 0) r += n_;
        return Scalar(Scalar::make_cyc(n_, Poly::monomial(static_cast<int>(r))));
    }
    }
    throw Error("q_pow: bad kind");
}

std::string Field::str() const {
    switch (kind_) {
    case FieldKind::Rational: return "rational";
    case FieldKind::FormalQ: return "formal-q";
    case FieldKind::Cyclotomic: return "cyclotomic:" + std::to_string(n_);
    }
    return "?";
}

// ---------------------------------------------------------------- Scalar

Scalar::RatFunc Scalar::make_ratfunc(Poly num, Poly den) {
    if (den.is_zero()) throw Error("Scalar: zero denominator");
    if (num.is_zero()) return {Poly{}, Poly::constant(1)};
    Poly g = qpoly::gcd(num, den);
    if (!(g.degree() == 0)) {
        num = qpoly::divmod(num, g).first;
        den = qpoly::divmod(den, g).first;
    }
    const Rat l = den.lead();
    if (l != 1) {
        const Poly scale = Poly::constant(Rat(1) / l);
        num = scale * num;
        den = scale * den;
    }
    return {std::move(num), std::move(den)};
}

Scalar::Cyc Scalar::make_cyc(int n, const Poly& raw) {
    return {n, qpoly::divmod(raw, qpoly::cyclotomic(n)).second};
}

void Scalar::require_same(const Scalar& a, const Scalar& b) {
    if (a.v_.index() != b.v_.index())
        throw Error("Scalar: field mismatch (" + a.str() + " vs " + b.str() + ")");
    if (auto* ca = std::get_if<Cyc>(&a.v_)) {
        if (ca->n != std::get<Cyc>(b.v_).n)
            throw Error("Scalar: cyclotomic order mismatch");
    }
}

FieldKind Scalar::field_kind() const {
    switch (v_.index()) {
    case 0: return FieldKind::Rational;
    case 1: return FieldKind::FormalQ;
    default: return FieldKind::Cyclotomic;
    }
}

int Scalar::cyclotomic_order() const {
    if (auto* c = std::get_if<Cyc>(&v_)) return c->n;
    return 0;
}

bool Scalar::is_zero() const {
    return std::visit([](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rat>) return x == 0;
        else if constexpr (std::is_same_v<T, RatFunc>) return x.num.is_zero();
        else return x.rep.is_zero();
    }, v_);
}

bool Scalar::is_one() const {
    return std::visit([](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rat>) return x == 1;
        else if constexpr (std::is_same_v<T, RatFunc>) return x.num.is_one() && x.den.is_one();
        else return x.rep.is_one();
    }, v_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same(*this, o);
    if (auto* a = std::get_if<Rat>(&v_)) return Scalar(*a + std::get<Rat>(o.v_));
    if (auto* a = std::get_if<RatFunc>(&v_)) {
        const auto& b = std::get<RatFunc>(o.v_);
        return Scalar(make_ratfunc(a->num * b.den + b.num * a->den, a->den * b.den));
    }
    const auto& a = std::get<Cyc>(v_);
    const auto& b = std::get<Cyc>(o.v_);
    return Scalar(Cyc{a.n, a.rep + b.rep});
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    return std::visit([](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rat>) return Scalar(Rat(-x));
        else if constexpr (std::is_same_v<T, RatFunc>) return Scalar(RatFunc{-x.num, x.den});
        else return Scalar(Cyc{x.n, -x.rep});
    }, v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same(*this, o);
    if (auto* a = std::get_if<Rat>(&v_)) return Scalar(*a * std::get<Rat>(o.v_));
    if (auto* a = std::get_if<RatFunc>(&v_)) {
        const auto& b = std::get<RatFunc>(o.v_);
        return Scalar(make_ratfunc(a->num * b.num, a->den * b.den));
    }
    const auto& a = std::get<Cyc>(v_);
    const auto& b = std::get<Cyc>(o.v_);
    return Scalar(make_cyc(a.n, a.rep * b.rep));
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error("Scalar::inv: division by zero");
    if (auto* a = std::get_if<Rat>(&v_)) return Scalar(Rat(1) / *a);
    if (auto* a = std::get_if<RatFunc>(&v_)) return Scalar(make_ratfunc(a->den, a->num));
    const auto& a = std::get<Cyc>(v_);
    // Phi_n is irreducible over Q, so ext_gcd(rep, Phi_n) has constant g.
    auto e = qpoly::ext_gcd(a.rep, qpoly::cyclotomic(a.n));
    if (e.g.degree() != 0)
        throw Error("Scalar::inv: internal cyclotomic inversion failure");
    const Poly scale = Poly::constant(Rat(1) / e.g.lead());
    return Scalar(make_cyc(a.n, scale * e.s));
}

bool Scalar::operator==(const Scalar& o) const {
    if (v_.index() != o.v_.index()) return false;
    return v_ == o.v_;
}

std::string Scalar::str() const {
    return std::visit([](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rat>) {
            return x.str();
        } else if constexpr (std::is_same_v<T, RatFunc>) {
            if (x.den.is_one()) return x.num.str();
            return "(" + x.num.str() + ")/(" + x.den.str() + ")";
        } else {
            return x.rep.str();
        }
    }, v_);
}

// ---------------------------------------------------------------- parsing

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool done() { skip_ws(); return i >= s.size(); }
    char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
};

boost::multiprecision::cpp_int parse_int(Cursor& c) {
    c.skip_ws();
    bool neg = false;
    if (c.eat('-')) neg = true;
    c.skip_ws();
    std::string digits;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        digits.push_back(c.s[c.i++]);
    if (digits.empty()) throw SchemaError("scalar parse: expected integer in '" + c.s + "'");
    boost::multiprecision::cpp_int v(digits);
    return neg ? -v : v;
}

// term := coefficient [ '*'? q-part ] | q-part
// coefficient := int [ '/' int ],  q-part := 'q' [ '^' int ]
Scalar parse_term(Cursor& c, const Field& field) {
    Rat coeff(1);
    bool have_coeff = false;
    if (c.peek() != 'q') {
        auto num = parse_int(c);
        boost::multiprecision::cpp_int den(1);
        if (c.eat('/')) den = parse_int(c);
        if (den == 0) throw SchemaError("scalar parse: zero denominator");
        coeff = Rat(num, den);
        have_coeff = true;
        c.eat('*');
    }
    long long qexp = 0;
    if (c.peek() == 'q') {
        c.eat('q');
        qexp = 1;
        if (c.eat('^')) {
            auto e = parse_int(c);
            qexp = static_cast<long long>(e);
        }
    } else if (!have_coeff) {
        throw SchemaError("scalar parse: empty term in '" + c.s + "'");
    }
    Scalar r = field.from_rat(coeff);
    if (qexp != 0) r = r * field.q_pow(qexp);
    return r;
}

} // namespace

Scalar Field::parse(const std::string& text) const {
    Cursor c{text};
    if (c.done()) throw SchemaError("scalar parse: empty string");
    Scalar acc = zero();
    bool negate = c.eat('-');
    while (true) {
        Scalar t = parse_term(c, *this);
        acc = negate ? acc - t : acc + t;
        if (c.done()) return acc;
        if (c.eat('+')) negate = false;
        else if (c.eat('-')) negate = true;
        else throw SchemaError("scalar parse: unexpected character in '" + text + "'");
    }
}

} // namespace pha
