#pragma once

#include <optional>
#include <vector>

#include "pha/scalar.hpp"

namespace pha::linalg {

// Sparse vector: (column, value) pairs, strictly ascending columns, no zeros.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec axpy(const SparseVec& x, const Scalar& c, const SparseVec& y); // x + c*y
SparseVec scale(const SparseVec& x, const Scalar& c);

/// Reduced row echelon form of a row list. The RREF of a row space is
/// canonical, so the serial and OpenMP paths produce bit-identical output.
struct Rref {
    int ncols = 0;
    std::vector<int> pivot_cols;   // ascending
    std::vector<SparseVec> rows;   // rows[k]: leading 1 at pivot_cols[k], fully reduced

    int rank() const { return static_cast<int>(pivot_cols.size()); }

    /// Canonical residue of v modulo the row space; supported on non-pivot
    /// columns only. This is the projection used by the quotient engine.
    SparseVec reduce(const SparseVec& v) const;
};

Rref rref(std::vector<SparseVec> rows, int ncols);          // parallel when enabled
Rref rref_serial(std::vector<SparseVec> rows, int ncols);   // reference implementation

/// Null-space basis of the linear system {row . x = 0 for each RREF row}.
/// One canonical vector per non-pivot column, ascending.
std::vector<SparseVec> kernel_from_rref(const Rref& r, const Field& f);

/// Sparse matrix, column major. Columns are canonical SparseVecs.
struct SparseMat {
    int nrows = 0, ncols = 0;
    std::vector<SparseVec> cols;

    static SparseMat zero(int nrows, int ncols);
    static SparseMat identity(int n, const Field& f);

    SparseVec apply(const SparseVec& x) const;            // matrix * vector
    SparseMat operator*(const SparseMat& o) const;
    SparseMat operator+(const SparseMat& o) const;
    SparseMat operator-(const SparseMat& o) const;
    bool operator==(const SparseMat& o) const;
    SparseMat scaled(const Scalar& c) const;
    std::vector<SparseVec> to_rows() const;
    long nnz() const;
};

int rank(const SparseMat& m);
std::vector<SparseVec> kernel(const SparseMat& m, const Field& f); // x with m.apply(x) = 0

/// Expresses query vectors in the span of a fixed generating family
/// (used to restrict operators to invariant subspaces).
class SpanSolver {
public:
    SpanSolver(const std::vector<SparseVec>& gens, int dim, const Field& f);
    int rank() const { return rank_; }
    /// Coefficients over the generating family, or nullopt if v is outside
    /// the span. Size equals the number of generators.
    std::optional<std::vector<Scalar>> coords(const SparseVec& v) const;

private:
    int dim_;
    int ngens_;
    int rank_;
    Field field_;
    Rref rref_;
};

} // namespace pha::linalg
