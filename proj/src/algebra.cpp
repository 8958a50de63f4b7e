#include "pha/algebra.hpp"

#include <sstream>

#include "pha/error.hpp"
#include "pha/parallel.hpp"

namespace pha {

// ---------------------------------------------------------------- elements

AlgebraElement AlgebraElement::term(const BasisId& b, Scalar c) {
    AlgebraElement e;
    if (!c.is_zero()) e.terms_.emplace(b, std::move(c));
    return e;
}

void AlgebraElement::add(const BasisId& b, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::axpy(const Scalar& c, const AlgebraElement& y) {
    if (c.is_zero()) return *this;
    for (const auto& [b, s] : y.terms_) add(b, c * s);
    return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& y) const {
    AlgebraElement out = *this;
    for (const auto& [b, s] : y.terms_) out.add(b, s);
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& y) const {
    AlgebraElement out = *this;
    for (const auto& [b, s] : y.terms_) out.add(b, -s);
    return out;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    AlgebraElement out;
    if (c.is_zero()) return out;
    for (const auto& [b, s] : terms_) {
        Scalar v = c * s;
        if (!v.is_zero()) out.terms_.emplace(b, std::move(v));
    }
    return out;
}

Scalar AlgebraElement::coeff(const BasisId& b, const Field& f) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? f.zero() : it->second;
}

void FreeTensor::add(const Tuple& t, const Scalar& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(t.size()) != level && level > 0)
        throw Error("FreeTensor::add: tuple length does not match level");
    auto [it, inserted] = terms.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

FreeTensor& FreeTensor::axpy(const Scalar& c, const FreeTensor& y) {
    if (level != y.level) throw Error("FreeTensor::axpy: level mismatch");
    if (c.is_zero()) return *this;
    for (const auto& [t, s] : y.terms) add(t, c * s);
    return *this;
}

FreeTensor tensor_expand(const std::vector<AlgebraElement>& factors) {
    if (factors.empty()) throw Error("tensor_expand: no factors");
    FreeTensor out;
    out.level = static_cast<int>(factors.size());
    std::vector<std::map<BasisId, Scalar>::const_iterator> pos;
    for (const auto& f : factors) {
        if (f.is_zero()) return out;
        pos.push_back(f.terms().begin());
    }
    while (true) {
        Tuple t;
        t.reserve(factors.size());
        Scalar c = pos[0]->second;
        t.push_back(pos[0]->first);
        for (size_t i = 1; i < factors.size(); ++i) {
            t.push_back(pos[i]->first);
            c *= pos[i]->second;
        }
        out.add(t, c);
        // odometer increment
        size_t i = factors.size();
        while (i > 0) {
            --i;
            if (++pos[i] != factors[i].terms().end()) break;
            pos[i] = factors[i].terms().begin();
            if (i == 0) return out;
        }
    }
}

// ---------------------------------------------------------------- algebra base

int BasedAlgebra::dim() const { throw Error("dim: algebra is not finite"); }

const std::vector<BasisId>& BasedAlgebra::basis() const {
    throw Error("basis: algebra is not finite");
}

AlgebraElement BasedAlgebra::mul(const AlgebraElement& x, const AlgebraElement& y) const {
    AlgebraElement out;
    for (const auto& [bx, cx] : x.terms()) {
        for (const auto& [by, cy] : y.terms()) {
            out.axpy(cx * cy, basis_product(bx, by));
        }
    }
    return out;
}

AlgebraElement BasedAlgebra::combine(const AlgebraElement& x, const AlgebraElement& y,
                                     const Scalar& c) const {
    require_member(x);
    require_member(y);
    AlgebraElement out = x;
    out.axpy(c, y);
    return out;
}

void BasedAlgebra::require_member(const AlgebraElement& x) const {
    for (const auto& [b, s] : x.terms()) {
        (void)s;
        if (!contains(b))
            throw Error("element does not belong to this algebra (label " + label_name(b) +
                        " unknown or foreign)");
    }
}

int BasedAlgebra::index_of(const BasisId& b) const {
    const auto& bs = basis();
    for (size_t i = 0; i < bs.size(); ++i)
        if (bs[i] == b) return static_cast<int>(i);
    throw Error("index_of: unknown basis label");
}

std::string BasedAlgebra::elem_str(const AlgebraElement& x) const {
    if (x.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [b, c] : x.terms()) {
        std::string cs = c.str();
        if (!first) out << " + ";
        if (cs == "1") {
            out << label_name(b);
        } else if (cs == "-1") {
            out << "-" << label_name(b);
        } else {
            const bool wrap = cs.find(' ') != std::string::npos ||
                              cs.find('/') != std::string::npos;
            if (wrap) out << "(" << cs << ")";
            else out << cs;
            out << "*" << label_name(b);
        }
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------- finite algebra

FiniteAlgebra::FiniteAlgebra(Field f, std::vector<BasisId> basis,
                             std::vector<std::string> names, AlgebraElement unit,
                             std::vector<std::vector<AlgebraElement>> table)
    : field_(f), basis_(std::move(basis)), names_(std::move(names)),
      unit_(std::move(unit)), table_(std::move(table)) {
    if (basis_.empty()) throw Error("FiniteAlgebra: empty basis");
    if (names_.size() != basis_.size())
        throw Error("FiniteAlgebra: names/basis size mismatch");
    if (table_.size() != basis_.size())
        throw Error("FiniteAlgebra: table has wrong row count");
    for (const auto& row : table_)
        if (row.size() != basis_.size())
            throw Error("FiniteAlgebra: table has wrong column count");
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (!index_.emplace(basis_[i], static_cast<int>(i)).second)
            throw Error("FiniteAlgebra: duplicate basis label");
    }
    for (const auto& row : table_)
        for (const auto& e : row) require_member(e);
    require_member(unit_);
}

AlgebraElement FiniteAlgebra::basis_product(const BasisId& x, const BasisId& y) const {
    auto ix = index_.find(x);
    auto iy = index_.find(y);
    if (ix == index_.end() || iy == index_.end())
        throw Error("FiniteAlgebra::basis_product: label not in this algebra");
    return table_[static_cast<size_t>(ix->second)][static_cast<size_t>(iy->second)];
}

std::string FiniteAlgebra::label_name(const BasisId& b) const {
    auto it = index_.find(b);
    if (it == index_.end()) return "<foreign>";
    return names_[static_cast<size_t>(it->second)];
}

// ---------------------------------------------------------------- quantum torus

TorusAlgebra::TorusAlgebra(Field f, int n_torus) : field_(f), n_(n_torus) {
    if (n_ < 0) throw Error("TorusAlgebra: negative order");
    if (n_ == 0 && f.kind() != FieldKind::FormalQ)
        throw Error("TorusAlgebra: formal mode requires the formal-q field");
    if (n_ > 0 && (f.kind() != FieldKind::Cyclotomic || f.cyclotomic_order() != n_))
        throw Error("TorusAlgebra: finite mode requires the cyclotomic field of the same order");
    unit_ = AlgebraElement::term(BasisId::torus(0, 0), field_.one());
    if (n_ > 0) {
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) all_.push_back(BasisId::torus(a, b));
    }
}

int TorusAlgebra::dim() const {
    if (n_ == 0) throw Error("dim: formal quantum torus is not finite");
    return n_ * n_;
}

const std::vector<BasisId>& TorusAlgebra::basis() const {
    if (n_ == 0) throw Error("basis: formal quantum torus is not finite");
    return all_;
}

std::vector<BasisId> TorusAlgebra::window_basis(int w) const {
    if (n_ > 0) return all_;
    if (w < 0) throw Error("window_basis: negative window");
    std::vector<BasisId> out;
    for (int a = -w; a <= w; ++a)
        for (int b = -w; b <= w; ++b) out.push_back(BasisId::torus(a, b));
    return out;
}

BasisId TorusAlgebra::canon_label(long n, long m) const {
    if (n_ > 0) {
        n %= n_; if (n < 0) n += n_;
        m %= n_; if (m < 0) m += n_;
    }
    return BasisId::torus(static_cast<int>(n), static_cast<int>(m));
}

AlgebraElement TorusAlgebra::basis_product(const BasisId& x, const BasisId& y) const {
    if (!contains(x) || !contains(y))
        throw Error("TorusAlgebra::basis_product: label not in this algebra");
    // U^a V^b * U^c V^d = q^{-bc} U^{a+c} V^{b+d}, from UV = qVU.
    const long a = x.a, b = x.b, c = y.a, d = y.b;
    const Scalar coeff = field_.q_pow(-b * c);
    return AlgebraElement::term(canon_label(a + c, b + d), coeff);
}

bool TorusAlgebra::contains(const BasisId& b) const {
    if (b.kind != BasisId::Kind::TorusMon) return false;
    if (n_ > 0) return b.a >= 0 && b.a < n_ && b.b >= 0 && b.b < n_;
    return true;
}

std::string TorusAlgebra::label_name(const BasisId& b) const {
    std::ostringstream out;
    if (b.a == 0 && b.b == 0) return "1";
    if (b.a != 0) out << "U^" << b.a;
    if (b.b != 0) out << (b.a != 0 ? "V^" : "V^") << b.b;
    return out.str();
}

// ---------------------------------------------------------------- Laurent base

LaurentAlgebra::LaurentAlgebra(Field f, int n_torus) : field_(f), n_(n_torus) {
    if (n_ < 0) throw Error("LaurentAlgebra: negative order");
    if (n_ == 0 && f.kind() != FieldKind::FormalQ)
        throw Error("LaurentAlgebra: formal mode requires the formal-q field");
    if (n_ > 0 && (f.kind() != FieldKind::Cyclotomic || f.cyclotomic_order() != n_))
        throw Error("LaurentAlgebra: finite mode requires the matching cyclotomic field");
    unit_ = AlgebraElement::term(BasisId::torus(0, 0), field_.one());
    if (n_ > 0)
        for (int a = 0; a < n_; ++a) all_.push_back(BasisId::torus(a, 0));
}

int LaurentAlgebra::dim() const {
    if (n_ == 0) throw Error("dim: Laurent algebra is not finite");
    return n_;
}

const std::vector<BasisId>& LaurentAlgebra::basis() const {
    if (n_ == 0) throw Error("basis: Laurent algebra is not finite");
    return all_;
}

std::vector<BasisId> LaurentAlgebra::window_basis(int w) const {
    if (n_ > 0) return all_;
    if (w < 0) throw Error("window_basis: negative window");
    std::vector<BasisId> out;
    for (int a = -w; a <= w; ++a) out.push_back(BasisId::torus(a, 0));
    return out;
}

BasisId LaurentAlgebra::canon_label(long k) const {
    if (n_ > 0) {
        k %= n_; if (k < 0) k += n_;
    }
    return BasisId::torus(static_cast<int>(k), 0);
}

AlgebraElement LaurentAlgebra::basis_product(const BasisId& x, const BasisId& y) const {
    if (!contains(x) || !contains(y))
        throw Error("LaurentAlgebra::basis_product: label not in this algebra");
    return AlgebraElement::term(canon_label(static_cast<long>(x.a) + y.a), field_.one());
}

bool LaurentAlgebra::contains(const BasisId& b) const {
    if (b.kind != BasisId::Kind::TorusMon || b.b != 0) return false;
    if (n_ > 0) return b.a >= 0 && b.a < n_;
    return true;
}

std::string LaurentAlgebra::label_name(const BasisId& b) const {
    if (b.a == 0) return "1";
    return "U^" + std::to_string(b.a);
}

// ---------------------------------------------------------------- checks

CheckReport check_associativity_unit(const BasedAlgebra& a, int window) {
    const std::vector<BasisId> w = a.window_basis(window);
    const long n = static_cast<long>(w.size());
    long cases = 0;

    // unit
    for (long i = 0; i < n; ++i) {
        AlgebraElement x = AlgebraElement::term(w[static_cast<size_t>(i)], a.field().one());
        AlgebraElement lhs = a.mul(a.unit(), x);
        AlgebraElement rhs = a.mul(x, a.unit());
        ++cases;
        if (!(lhs == x) || !(rhs == x)) {
            Witness wit;
            wit.inputs = {a.label_name(w[static_cast<size_t>(i)])};
            wit.lhs = a.elem_str(lhs);
            wit.rhs = a.elem_str(rhs);
            wit.note = "unit law violated";
            return CheckReport::fail("algebra.assoc_unit", std::move(wit), cases);
        }
    }

    // associativity over all window triples
    const long total = n * n * n;
    long bad = par::first_failure(total, [&](long t) {
        const long i = t / (n * n), j = (t / n) % n, k = t % n;
        const auto &bi = w[static_cast<size_t>(i)], &bj = w[static_cast<size_t>(j)],
                   &bk = w[static_cast<size_t>(k)];
        AlgebraElement xy = a.basis_product(bi, bj);
        AlgebraElement yz = a.basis_product(bj, bk);
        AlgebraElement lhs;
        for (const auto& [b, c] : xy.terms()) lhs.axpy(c, a.basis_product(b, bk));
        AlgebraElement rhs;
        for (const auto& [b, c] : yz.terms()) rhs.axpy(c, a.basis_product(bi, b));
        return lhs == rhs;
    });
    cases += total;
    if (bad >= 0) {
        const long i = bad / (n * n), j = (bad / n) % n, k = bad % n;
        const auto &bi = w[static_cast<size_t>(i)], &bj = w[static_cast<size_t>(j)],
                   &bk = w[static_cast<size_t>(k)];
        AlgebraElement xy = a.basis_product(bi, bj);
        AlgebraElement yz = a.basis_product(bj, bk);
        AlgebraElement lhs;
        for (const auto& [b, c] : xy.terms()) lhs.axpy(c, a.basis_product(b, bk));
        AlgebraElement rhs;
        for (const auto& [b, c] : yz.terms()) rhs.axpy(c, a.basis_product(bi, b));
        Witness wit;
        wit.inputs = {a.label_name(bi), a.label_name(bj), a.label_name(bk)};
        wit.lhs = a.elem_str(lhs);
        wit.rhs = a.elem_str(rhs);
        wit.note = "associativity violated";
        return CheckReport::fail("algebra.assoc_unit", std::move(wit), cases);
    }

    if (a.finite()) return CheckReport::pass("algebra.assoc_unit", cases);
    return CheckReport::pass_on_window("algebra.assoc_unit", cases,
                                       "labels of size <= " + std::to_string(window));
}

} // namespace pha
