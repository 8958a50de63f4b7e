#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pha/instance.hpp"
#include "pha/linalg.hpp"
#include "pha/report.hpp"

namespace pha {

enum class Engine { Quotient, NormalForm };

inline std::string engine_str(Engine e) {
    return e == Engine::Quotient ? "quotient" : "normal-form";
}

/// Element of H^{(x)_R n} in canonical coordinates over the space basis.
/// Keys are basis tuples; equality is coordinate equality.
struct TensorElement {
    int level = 0;
    std::map<Tuple, Scalar> coords;

    bool is_zero() const { return coords.empty(); }
    void add(const Tuple& t, const Scalar& c);
    TensorElement& axpy(const Scalar& c, const TensorElement& y);
    TensorElement operator-(const TensorElement& y) const;
    bool operator==(const TensorElement&) const = default;
};

/// Concrete model of the bimodule tensor power H^{(x)_R n}.
///
/// Level 0 is R and level 1 is H; their tuples have length 1 (level-0
/// tuples hold base-algebra labels). The quotient engine computes an exact
/// RREF of the bimodule relation rows
///   x1 (x) ... (x) beta(r) x_i (x) x_{i+1} (x) ... - x1 (x) ... (x) x_i (x) alpha(r) x_{i+1} (x) ...
/// over adjacent slots and base basis elements, with free tuples ordered
/// lexicographically by label; the basis is the set of non-pivot tuples.
/// The normal-form engine canonicalizes tuples through the monomial
/// backend's rewriting instead and never materializes relations.
class TensorSpace {
public:
    static TensorSpace build(const ParaHopfInstance& inst, int level, Engine engine);

    int level() const { return level_; }
    Engine engine() const { return engine_; }
    const ParaHopfInstance& instance() const { return *inst_; }
    bool finite() const { return finite_; }

    int dim() const;
    const std::vector<Tuple>& basis() const;
    int index_of(const Tuple& t) const;

    TensorElement project(const FreeTensor& ft) const;
    TensorElement zero() const { return TensorElement{level_, {}}; }

    /// Canonical basis tuples with all slot labels of size <= w
    /// (enumerable engines); the full basis when finite.
    std::vector<Tuple> window_tuples(int w) const;

    linalg::SparseVec to_vec(const TensorElement& t) const;
    TensorElement from_vec(const linalg::SparseVec& v) const;

    // Quotient engine relation stream (level >= 2): one generator per
    // (adjacent slot, base basis element, free tuple).
    long relation_count() const;
    FreeTensor relation_free(long k) const;
    std::string relation_desc(long k) const;

    // Normal-form canonicalization of a single free tuple.
    std::pair<Scalar, Tuple> canonicalize(const Tuple& t) const;

    std::string tuple_str(const Tuple& t) const;
    std::string elem_str(const TensorElement& t) const;

private:
    TensorSpace() = default;

    long free_index(const Tuple& t) const;
    Tuple unrank(long idx) const;
    const BasedAlgebra& slot_algebra() const; // H for level >= 1, R at level 0

    const ParaHopfInstance* inst_ = nullptr;
    int level_ = 0;
    Engine engine_ = Engine::Quotient;
    bool finite_ = true;

    // label ranking for free tuples (H labels; R labels at level 0)
    std::vector<BasisId> slot_labels_; // sorted
    std::map<BasisId, int> slot_rank_;

    // quotient engine
    linalg::Rref relations_;
    // both engines (finite): canonical basis
    std::vector<Tuple> basis_;
    std::map<Tuple, int> basis_index_;
};

/// Eq. (2): componentwise right multiplication of a tensor class by a free
/// tuple of algebra elements.
TensorElement right_action(const TensorSpace& space, const TensorElement& t,
                           const std::vector<AlgebraElement>& gs);

/// Eq. (3): diagonal left action h |> t through the iterated coproduct.
TensorElement diagonal_action(const TensorSpace& space, const AlgebraElement& h,
                              const TensorElement& t);

/// Linear map between tensor levels, given on free tuples of the source.
struct FreeTupleMap {
    std::string name;
    int src_level = 0, dst_level = 0;
    std::function<FreeTensor(const Tuple&)> image;
};

/// Applies a free-tuple map to a canonical element (either engine).
TensorElement apply_map(const TensorSpace& src, const TensorSpace& dst,
                        const FreeTupleMap& m, const TensorElement& t);

/// Lazily built tensor powers of one instance under one engine. The
/// instance must outlive the cache.
class SpaceCache {
public:
    SpaceCache(const ParaHopfInstance& inst, Engine engine)
        : inst_(&inst), engine_(engine) {}
    const TensorSpace& level(int n) {
        auto it = spaces_.find(n);
        if (it == spaces_.end())
            it = spaces_.emplace(n, TensorSpace::build(*inst_, n, engine_)).first;
        return it->second;
    }
    Engine engine() const { return engine_; }
    const ParaHopfInstance& instance() const { return *inst_; }

private:
    const ParaHopfInstance* inst_;
    Engine engine_;
    std::map<int, TensorSpace> spaces_;
};

struct WellDefinedResult {
    CheckReport report;
    std::optional<linalg::SparseMat> matrix; // induced matrix (finite spaces, on pass)
};

/// Certifies that a candidate map on free tensors descends to the quotient:
/// it must annihilate every relation generator (quotient engine) or be
/// invariant under single rewriting moves on windowed tuples (normal-form
/// engine). On success over finite spaces the induced matrix is returned.
WellDefinedResult verify_well_defined(const TensorSpace& src, const TensorSpace& dst,
                                      const FreeTupleMap& m, int window);

} // namespace pha
