#include "pha/qpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace pha::qpoly {

Poly Poly::constant(const Rat& r) {
    if (r == 0) return Poly{};
    return Poly(std::vector<Rat>{r});
}

Poly Poly::monomial(int degree, const Rat& coeff) {
    if (degree < 0) throw Error("Poly::monomial: negative degree");
    if (coeff == 0) return Poly{};
    std::vector<Rat> c(static_cast<size_t>(degree) + 1, Rat(0));
    c.back() = coeff;
    return Poly(std::move(c));
}

const Rat& Poly::lead() const {
    if (is_zero()) throw Error("Poly::lead: zero polynomial");
    return c_.back();
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<size_t>(i)];
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Rat> r(c_);
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly{};
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    std::vector<Rat> r(c_);
    const Rat l = c_.back();
    for (auto& x : r) x /= l;
    return Poly(std::move(r));
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat c = coeff(i);
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const Rat a = abs(c);
        if (i == 0 || a != 1) {
            out << a.str();
            if (i != 0) out << "*";
        }
        if (i == 1) out << var;
        else if (i > 1) out << var << "^" << i;
        first = false;
    }
    return out.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("Poly divmod: division by zero polynomial");
    std::vector<Rat> rem(a.coeffs());
    const int db = b.degree();
    const Rat lb = b.lead();
    if (a.degree() < db) return {Poly{}, a};
    std::vector<Rat> quot(static_cast<size_t>(a.degree() - db) + 1, Rat(0));
    for (int i = a.degree(); i >= db; --i) {
        const Rat c = rem[static_cast<size_t>(i)];
        if (c == 0) continue;
        const Rat f = c / lb;
        quot[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] -= f * b.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    // Invariants: s0*a + t0*b = r0, s1*a + t1*b = r1.
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(1), s1{};
    Poly t0{}, t1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s = s0 - q * s1;
        Poly t = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s);
        t0 = std::move(t1); t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Rat l = r0.lead();
    const Poly scale = Poly::constant(Rat(1) / l);
    return {r0.monic(), scale * s0, scale * t0};
}

const Poly& cyclotomic(int n) {
    if (n < 1) throw Error("cyclotomic: n must be >= 1");
    static std::map<int, Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (q^n - 1) / prod_{d | n, d < n} Phi_d, computed without
    // touching the cache recursively (fill divisors bottom-up).
    for (int m = 1; m <= n; ++m) {
        if (n % m != 0 || cache.count(m)) continue;
        Poly num = Poly::monomial(m) - Poly::constant(1);
        for (int d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            auto [q, r] = divmod(num, cache.at(d));
            if (!r.is_zero()) throw Error("cyclotomic: internal division failure");
            num = std::move(q);
        }
        cache.emplace(m, std::move(num));
    }
    return cache.at(n);
}

} // namespace pha::qpoly
