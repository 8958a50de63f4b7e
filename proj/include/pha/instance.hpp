#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pha/algebra.hpp"
#include "pha/report.hpp"

namespace pha {

/// Finite-dimensional Hopf algebra over the active field, with a character
/// delta. Used to build the sandwich and double-crossed-product instances
/// and for the Hopf-case roundtrip between para-antipodes and twisted
/// antipodes.
struct HopfAlgebraData {
    std::shared_ptr<const FiniteAlgebra> algebra;
    std::vector<FreeTensor> coproduct;    // per basis index, level 2
    std::vector<Scalar> counit;           // per basis index
    std::vector<AlgebraElement> antipode; // per basis index
    std::vector<Scalar> character;        // delta, per basis index

    const Field& field() const { return algebra->field(); }
    int dim() const { return algebra->dim(); }

    FreeTensor coproduct_elem(const AlgebraElement& x) const;
    Scalar counit_elem(const AlgebraElement& x) const;
    Scalar character_elem(const AlgebraElement& x) const;
    AlgebraElement antipode_elem(const AlgebraElement& x) const;
    /// delta * S, the twisted antipode.
    AlgebraElement twisted_antipode(const AlgebraElement& x) const;
    FreeTensor iterated_coproduct(const AlgebraElement& x, int n) const;

    /// Hopf axioms, delta being an algebra map, and involutivity of the
    /// twisted antipode.
    std::vector<CheckReport> validate() const;
};

/// Group algebra of Z/order as Hopf data; delta given on g^0..g^{order-1}.
HopfAlgebraData make_cyclic_group_hopf(const Field& f, int order,
                                       std::vector<Scalar> delta);

/// A based algebra pair (H, R) with all para-Hopf structure maps given on
/// basis labels. No axioms are assumed; the axioms module checks them.
struct ParaHopfInstance {
    std::string name;
    std::string kind; // groupoid | quantum_torus | sandwich | double_crossed | raw
    Field field = Field::rationals();
    std::shared_ptr<const BasedAlgebra> total; // H
    std::shared_ptr<const BasedAlgebra> base;  // R

    std::function<AlgebraElement(const BasisId&)> alpha;         // R basis -> H
    std::function<AlgebraElement(const BasisId&)> beta;          // R basis -> H
    std::function<FreeTensor(const BasisId&)> coproduct;         // H basis -> free 2-tensor
    std::function<AlgebraElement(const BasisId&)> counit;        // H basis -> R
    std::function<AlgebraElement(const BasisId&)> para_antipode; // H basis -> H
    std::function<AlgebraElement(const BasisId&)> haar;          // H basis -> R; may be null

    std::vector<AlgebraElement> generators; // of H, for generator-based checks
    std::shared_ptr<const HopfAlgebraData> hopf; // set when built from Hopf data
    bool monomial_backend = false; // normal-form tensor engine available
    int torus_order = 0;           // quantum torus only; 0 = formal

    bool finite() const { return total->finite(); }
    bool has_haar() const { return static_cast<bool>(haar); }

    AlgebraElement alpha_elem(const AlgebraElement& r) const;
    AlgebraElement beta_elem(const AlgebraElement& r) const;
    FreeTensor coproduct_elem(const AlgebraElement& h) const;
    AlgebraElement counit_elem(const AlgebraElement& h) const;
    AlgebraElement antipode_elem(const AlgebraElement& h) const;
    AlgebraElement haar_elem(const AlgebraElement& h) const;
    /// Delta^{n-1} as a level-n free tensor (n >= 1; n = 1 is the identity).
    FreeTensor iterated_coproduct(const AlgebraElement& h, int n) const;
};

/// Groupoid presentation: finite object set, morphisms with source/target,
/// and a composition table (compose[i][j] = index of m_i . m_j when
/// target(m_j) = source(m_i), else -1).
struct GroupoidData {
    int n_objects = 0;
    struct Mor {
        int src = 0, tgt = 0;
        std::string name;
    };
    std::vector<Mor> morphisms;
    std::vector<std::vector<int>> compose;
};

GroupoidData make_pair_groupoid(int n_objects);
GroupoidData make_cyclic_group_groupoid(int order);

/// Groupoid algebra kG over the object subalgebra kS. t_override replaces
/// the inverse map by an arbitrary morphism permutation (negative controls).
ParaHopfInstance build_groupoid(const GroupoidData& g,
                                std::optional<std::vector<int>> t_override = std::nullopt,
                                const std::string& name = "groupoid");

/// Quantum torus over Laurent polynomials in U; n = 0 gives the formal-q
/// instance, n >= 2 the finite surrogate with U^n = V^n = 1 over
/// cyclotomic(n).
ParaHopfInstance build_quantum_torus(int n, const std::string& name = "quantum-torus");

/// Sandwich R (x) Hopf (x) R^op.
ParaHopfInstance build_sandwich(std::shared_ptr<const FiniteAlgebra> base,
                                HopfAlgebraData hopf,
                                const std::string& name = "sandwich");

/// Double crossed product P x| Hopf |x P^op for a left module algebra P;
/// action[h][p] is the action of basis h on basis p.
ParaHopfInstance build_double_crossed(std::shared_ptr<const FiniteAlgebra> p,
                                      HopfAlgebraData hopf,
                                      std::vector<std::vector<AlgebraElement>> action,
                                      const std::string& name = "double-crossed");

/// Structure-constant tables for an arbitrary finite candidate. Labels are
/// raw indices; nothing is assumed or checked beyond dimensions.
struct RawTables {
    std::string name = "raw";
    Field field = Field::rationals();
    std::vector<std::string> h_names, r_names;
    std::vector<std::vector<AlgebraElement>> h_table, r_table;
    AlgebraElement h_unit, r_unit;
    std::vector<AlgebraElement> alpha, beta; // per R basis index
    std::vector<FreeTensor> delta;           // per H basis index
    std::vector<AlgebraElement> eps;         // per H basis index
    std::vector<AlgebraElement> t;           // per H basis index
    std::vector<AlgebraElement> generators;  // optional (default: full basis)
    std::vector<AlgebraElement> haar;        // optional
};

ParaHopfInstance build_raw(const RawTables& tables);
RawTables export_tables(const ParaHopfInstance& inst); // finite instances only

std::shared_ptr<const FiniteAlgebra> make_scalar_algebra(const Field& f);
std::shared_ptr<const FiniteAlgebra> make_functions_algebra(const Field& f, int npoints);

} // namespace pha
