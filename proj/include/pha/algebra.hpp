#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pha/basis.hpp"
#include "pha/report.hpp"
#include "pha/scalar.hpp"

namespace pha {

/// Finite formal linear combination of basis labels. Canonical sparse form:
/// zero coefficients are never stored, iteration order is label order.
class AlgebraElement {
public:
    AlgebraElement() = default;
    static AlgebraElement term(const BasisId& b, Scalar c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<BasisId, Scalar>& terms() const { return terms_; }
    size_t support_size() const { return terms_.size(); }

    void add(const BasisId& b, const Scalar& c);
    AlgebraElement& axpy(const Scalar& c, const AlgebraElement& y); // *this += c*y
    AlgebraElement operator+(const AlgebraElement& y) const;
    AlgebraElement operator-(const AlgebraElement& y) const;
    AlgebraElement scaled(const Scalar& c) const;
    Scalar coeff(const BasisId& b, const Field& f) const; // field zero when absent

    bool operator==(const AlgebraElement&) const = default;

private:
    std::map<BasisId, Scalar> terms_;
};

/// Free k-linear n-fold tensor of algebra elements: a sparse combination of
/// label tuples. This is the representation structure maps are given in
/// before projecting to a bimodule tensor power.
struct FreeTensor {
    int level = 0;
    std::map<Tuple, Scalar> terms;

    void add(const Tuple& t, const Scalar& c);
    FreeTensor& axpy(const Scalar& c, const FreeTensor& y);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const FreeTensor&) const = default;
};

/// Expands e_1 (x) ... (x) e_n into a level-n FreeTensor.
FreeTensor tensor_expand(const std::vector<AlgebraElement>& factors);

/// Based associative unital algebra: the product is given on basis labels
/// and extended bilinearly. Finite algebras expose their basis; enumerable
/// ones expose a window enumerator instead.
class BasedAlgebra {
public:
    virtual ~BasedAlgebra() = default;

    virtual const Field& field() const = 0;
    virtual bool finite() const = 0;
    virtual int dim() const;                          // finite only
    virtual const std::vector<BasisId>& basis() const; // finite only
    /// Basis labels of size <= w; the full basis when finite.
    virtual std::vector<BasisId> window_basis(int w) const = 0;
    virtual AlgebraElement basis_product(const BasisId& x, const BasisId& y) const = 0;
    virtual const AlgebraElement& unit() const = 0;
    virtual bool contains(const BasisId& b) const = 0;
    virtual std::string label_name(const BasisId& b) const = 0;

    AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) const;
    /// x + c*y with membership validation on both operands.
    AlgebraElement combine(const AlgebraElement& x, const AlgebraElement& y,
                           const Scalar& c) const;
    void require_member(const AlgebraElement& x) const;
    int index_of(const BasisId& b) const; // finite only
    std::string elem_str(const AlgebraElement& x) const;
};

/// Finite-dimensional algebra with an explicit multiplication table.
class FiniteAlgebra final : public BasedAlgebra {
public:
    FiniteAlgebra(Field f, std::vector<BasisId> basis, std::vector<std::string> names,
                  AlgebraElement unit, std::vector<std::vector<AlgebraElement>> table);

    const Field& field() const override { return field_; }
    bool finite() const override { return true; }
    int dim() const override { return static_cast<int>(basis_.size()); }
    const std::vector<BasisId>& basis() const override { return basis_; }
    std::vector<BasisId> window_basis(int) const override { return basis_; }
    AlgebraElement basis_product(const BasisId& x, const BasisId& y) const override;
    const AlgebraElement& unit() const override { return unit_; }
    bool contains(const BasisId& b) const override { return index_.count(b) != 0; }
    std::string label_name(const BasisId& b) const override;

private:
    Field field_;
    std::vector<BasisId> basis_;
    std::vector<std::string> names_;
    std::map<BasisId, int> index_;
    AlgebraElement unit_;
    std::vector<std::vector<AlgebraElement>> table_; // table_[i][j] = b_i * b_j
};

/// Quantum torus: monomial basis U^n V^m with U^a V^b * U^c V^d =
/// q^{-bc} U^{a+c} V^{b+d} (from UV = qVU). Formal mode (n_torus = 0) is
/// enumerable over the rational-function field; finite mode imposes
/// U^N = V^N = 1 over cyclotomic(N). Products are always single monomials.
class TorusAlgebra final : public BasedAlgebra {
public:
    TorusAlgebra(Field f, int n_torus);

    const Field& field() const override { return field_; }
    bool finite() const override { return n_ > 0; }
    int dim() const override;
    const std::vector<BasisId>& basis() const override;
    std::vector<BasisId> window_basis(int w) const override;
    AlgebraElement basis_product(const BasisId& x, const BasisId& y) const override;
    const AlgebraElement& unit() const override { return unit_; }
    bool contains(const BasisId& b) const override;
    std::string label_name(const BasisId& b) const override;

    int order() const { return n_; } // 0 when formal
    BasisId canon_label(long n, long m) const;

private:
    Field field_;
    int n_;
    AlgebraElement unit_;
    std::vector<BasisId> all_; // finite mode only
};

/// Laurent polynomials in U (the quantum torus base algebra). Labels are
/// torus monomials with V-exponent 0 so the inclusion into the torus is the
/// identity on labels.
class LaurentAlgebra final : public BasedAlgebra {
public:
    LaurentAlgebra(Field f, int n_torus);

    const Field& field() const override { return field_; }
    bool finite() const override { return n_ > 0; }
    int dim() const override;
    const std::vector<BasisId>& basis() const override;
    std::vector<BasisId> window_basis(int w) const override;
    AlgebraElement basis_product(const BasisId& x, const BasisId& y) const override;
    const AlgebraElement& unit() const override { return unit_; }
    bool contains(const BasisId& b) const override;
    std::string label_name(const BasisId& b) const override;

    BasisId canon_label(long k) const;

private:
    Field field_;
    int n_;
    AlgebraElement unit_;
    std::vector<BasisId> all_;
};

/// Exhaustive associativity + unit check on finite algebras; windowed on
/// enumerable ones (all basis triples with label size <= window).
CheckReport check_associativity_unit(const BasedAlgebra& a, int window);

} // namespace pha
