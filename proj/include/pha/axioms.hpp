#pragma once

#include <vector>

#include "pha/instance.hpp"
#include "pha/report.hpp"
#include "pha/rtensor.hpp"

namespace pha {

struct AxiomParams {
    Engine engine = Engine::Quotient;
    int window = 3;      // label-size window for enumerable instances
    int word_length = 4; // generator-product closure depth (Eq. (1))
};

/// Checkers for the bialgebroid axioms (BA1-BA3), the derived identity cu3,
/// the para-antipode axioms (PH1-PH3) in both formulations, and the
/// generator strategy for Eq. (1). Checks never throw on mathematical
/// failure; they return reports with witnesses.
class AxiomChecker {
public:
    AxiomChecker(const ParaHopfInstance& inst, AxiomParams params);

    std::vector<CheckReport> ba1();
    std::vector<CheckReport> coproduct();
    std::vector<CheckReport> counit();
    CheckReport cu3();
    std::vector<CheckReport> para_antipode();

    /// Full suite: algebra sanity for H and R, BA1-BA3, cu3, PH1-PH3,
    /// plus Hopf-data validation and the roundtrip when Hopf data is
    /// attached to the instance.
    std::vector<CheckReport> all();

    const TensorSpace& space(int n) { return cache_.level(n); }

private:
    std::vector<BasisId> h_window() const;
    std::vector<BasisId> r_window() const;
    CheckReport finish(std::string name, long cases) const;
    TensorElement eq1_lhs(const AlgebraElement& h);
    TensorElement eq1_rhs(const AlgebraElement& h);
    TensorElement tau2(const TensorElement& t);

    const ParaHopfInstance& inst_;
    AxiomParams params_;
    SpaceCache cache_;
};

/// Prop. 2.5 roundtrip for plain Hopf algebras (the R = k case):
/// from a candidate T recover delta = eps . T and verify T = delta * S;
/// from the data's character delta build T = delta * S and verify the
/// antialgebra property and Eq. (1) in H (x) H.
std::vector<CheckReport> hopf_roundtrip(const HopfAlgebraData& hd,
                                        const std::vector<AlgebraElement>& t_on_basis);

} // namespace pha
