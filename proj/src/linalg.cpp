#include "pha/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pha/parallel.hpp"

namespace pha::linalg {

SparseVec axpy(const SparseVec& x, const Scalar& c, const SparseVec& y) {
    if (c.is_zero() || y.empty()) return x;
    SparseVec out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j >= y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i >= x.size() || y[j].first < x[i].first) {
            Scalar v = c * y[j].second;
            if (!v.is_zero()) out.emplace_back(y[j].first, std::move(v));
            ++j;
        } else {
            Scalar v = x[i].second + c * y[j].second;
            if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
            ++i; ++j;
        }
    }
    return out;
}

SparseVec scale(const SparseVec& x, const Scalar& c) {
    if (c.is_zero()) return {};
    SparseVec out;
    out.reserve(x.size());
    for (const auto& [col, v] : x) {
        Scalar w = c * v;
        if (!w.is_zero()) out.emplace_back(col, std::move(w));
    }
    return out;
}

namespace {

// Reduce the leading entry against pivots until it is not a pivot column.
// Pivot rows are normalized to leading coefficient 1, so each step is a
// single axpy. Tail entries at pivot columns are cleaned later by the
// back-substitution pass.
SparseVec forward_reduce(SparseVec row, const std::map<int, SparseVec>& pivots) {
    while (!row.empty()) {
        auto it = pivots.find(row.front().first);
        if (it == pivots.end()) break;
        row = axpy(row, -row.front().second, it->second);
    }
    return row;
}

void back_substitute(std::vector<int>& pivot_cols, std::vector<SparseVec>& rows) {
    // Descending pivot order: at step k, rows[k] already contains no other
    // pivot column, so eliminating pivot_cols[k] from earlier rows is final.
    for (int k = static_cast<int>(rows.size()) - 1; k >= 0; --k) {
        const int p = pivot_cols[static_cast<size_t>(k)];
        par::for_each_index(k, [&](long j) {
            auto& r = rows[static_cast<size_t>(j)];
            auto it = std::lower_bound(r.begin(), r.end(), p,
                                       [](const auto& e, int col) { return e.first < col; });
            if (it != r.end() && it->first == p)
                r = axpy(r, -it->second, rows[static_cast<size_t>(k)]);
        });
    }
}

Rref finish(std::map<int, SparseVec> pivots, int ncols) {
    Rref out;
    out.ncols = ncols;
    out.pivot_cols.reserve(pivots.size());
    out.rows.reserve(pivots.size());
    for (auto& [col, row] : pivots) {
        out.pivot_cols.push_back(col);
        out.rows.push_back(std::move(row));
    }
    back_substitute(out.pivot_cols, out.rows);
    return out;
}

} // namespace

Rref rref_serial(std::vector<SparseVec> rows, int ncols) {
    std::map<int, SparseVec> pivots;
    for (auto& raw : rows) {
        SparseVec row = forward_reduce(std::move(raw), pivots);
        if (row.empty()) continue;
        const Scalar lead = row.front().second;
        row = scale(row, lead.inv());
        pivots.emplace(row.front().first, std::move(row));
    }
    return finish(std::move(pivots), ncols);
}

Rref rref(std::vector<SparseVec> rows, int ncols) {
    if (!par::parallel_enabled()) return rref_serial(std::move(rows), ncols);
    std::map<int, SparseVec> pivots;
    std::vector<SparseVec> pending = std::move(rows);
    while (!pending.empty()) {
        par::for_each_index(static_cast<long>(pending.size()), [&](long i) {
            pending[static_cast<size_t>(i)] =
                forward_reduce(std::move(pending[static_cast<size_t>(i)]), pivots);
        });
        // Serial scan in input order: claim one new pivot per column, defer
        // clashes to the next round. The final RREF is canonical, so the
        // outcome matches the serial path exactly.
        std::vector<SparseVec> deferred;
        std::set<int> claimed;
        for (auto& row : pending) {
            if (row.empty()) continue;
            const int lead = row.front().first;
            if (pivots.count(lead) || claimed.count(lead)) {
                deferred.push_back(std::move(row));
                continue;
            }
            const Scalar l = row.front().second;
            row = scale(row, l.inv());
            claimed.insert(lead);
            pivots.emplace(lead, std::move(row));
        }
        pending = std::move(deferred);
    }
    return finish(std::move(pivots), ncols);
}

SparseVec Rref::reduce(const SparseVec& v) const {
    // Pivot rows are fully reduced: subtracting them introduces only
    // non-pivot columns, so one scan over v's pivot entries suffices.
    std::map<int, Scalar> acc;
    for (const auto& [col, s] : v) acc[col] = s; // v is canonical, no merge needed
    SparseVec out;
    for (size_t k = 0; k < pivot_cols.size(); ++k) {
        auto it = acc.find(pivot_cols[k]);
        if (it == acc.end() || it->second.is_zero()) continue;
        const Scalar c = it->second;
        acc.erase(it);
        for (const auto& [col, s] : rows[k]) {
            if (col == pivot_cols[k]) continue;
            auto [jt, inserted] = acc.emplace(col, -(c * s));
            if (!inserted) jt->second -= c * s;
        }
    }
    for (auto& [col, s] : acc)
        if (!s.is_zero()) out.emplace_back(col, std::move(s));
    return out;
}

std::vector<SparseVec> kernel_from_rref(const Rref& r, const Field& f) {
    std::set<int> pivots(r.pivot_cols.begin(), r.pivot_cols.end());
    std::vector<SparseVec> basis;
    for (int free = 0; free < r.ncols; ++free) {
        if (pivots.count(free)) continue;
        std::map<int, Scalar> entries;
        entries.emplace(free, f.one());
        for (size_t k = 0; k < r.rows.size(); ++k) {
            const auto& row = r.rows[k];
            auto it = std::lower_bound(row.begin(), row.end(), free,
                                       [](const auto& e, int col) { return e.first < col; });
            if (it != row.end() && it->first == free)
                entries.emplace(r.pivot_cols[k], -it->second);
        }
        SparseVec v;
        for (auto& [col, s] : entries)
            if (!s.is_zero()) v.emplace_back(col, std::move(s));
        basis.push_back(std::move(v));
    }
    return basis;
}

SparseMat SparseMat::zero(int nrows, int ncols) {
    SparseMat m;
    m.nrows = nrows;
    m.ncols = ncols;
    m.cols.assign(static_cast<size_t>(ncols), {});
    return m;
}

SparseMat SparseMat::identity(int n, const Field& f) {
    SparseMat m = zero(n, n);
    for (int j = 0; j < n; ++j) m.cols[static_cast<size_t>(j)] = {{j, f.one()}};
    return m;
}

SparseVec SparseMat::apply(const SparseVec& x) const {
    std::map<int, Scalar> acc;
    for (const auto& [j, c] : x) {
        if (j < 0 || j >= ncols) throw Error("SparseMat::apply: index out of range");
        for (const auto& [i, s] : cols[static_cast<size_t>(j)]) {
            auto [it, inserted] = acc.emplace(i, c * s);
            if (!inserted) it->second += c * s;
        }
    }
    SparseVec out;
    for (auto& [i, s] : acc)
        if (!s.is_zero()) out.emplace_back(i, std::move(s));
    return out;
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
    if (ncols != o.nrows) throw Error("SparseMat: product shape mismatch");
    SparseMat out = zero(nrows, o.ncols);
    par::for_each_index(o.ncols, [&](long j) {
        out.cols[static_cast<size_t>(j)] = apply(o.cols[static_cast<size_t>(j)]);
    });
    return out;
}

SparseMat SparseMat::operator+(const SparseMat& o) const {
    if (nrows != o.nrows || ncols != o.ncols) throw Error("SparseMat: sum shape mismatch");
    SparseMat out = zero(nrows, ncols);
    for (int j = 0; j < ncols; ++j) {
        const auto& a = cols[static_cast<size_t>(j)];
        const auto& b = o.cols[static_cast<size_t>(j)];
        SparseVec c = a;
        if (!b.empty()) {
            Scalar one = b.front().second * b.front().second.inv();
            c = axpy(a, one, b);
        }
        out.cols[static_cast<size_t>(j)] = std::move(c);
    }
    return out;
}

SparseMat SparseMat::operator-(const SparseMat& o) const {
    if (nrows != o.nrows || ncols != o.ncols) throw Error("SparseMat: diff shape mismatch");
    SparseMat out = zero(nrows, ncols);
    for (int j = 0; j < ncols; ++j) {
        const auto& a = cols[static_cast<size_t>(j)];
        const auto& b = o.cols[static_cast<size_t>(j)];
        SparseVec c = a;
        if (!b.empty()) {
            Scalar mone = -(b.front().second * b.front().second.inv());
            c = axpy(a, mone, b);
        }
        out.cols[static_cast<size_t>(j)] = std::move(c);
    }
    return out;
}

bool SparseMat::operator==(const SparseMat& o) const {
    return nrows == o.nrows && ncols == o.ncols && cols == o.cols;
}

SparseMat SparseMat::scaled(const Scalar& c) const {
    SparseMat out = zero(nrows, ncols);
    for (int j = 0; j < ncols; ++j)
        out.cols[static_cast<size_t>(j)] = scale(cols[static_cast<size_t>(j)], c);
    return out;
}

std::vector<SparseVec> SparseMat::to_rows() const {
    std::vector<SparseVec> rows(static_cast<size_t>(nrows));
    for (int j = 0; j < ncols; ++j)
        for (const auto& [i, s] : cols[static_cast<size_t>(j)])
            rows[static_cast<size_t>(i)].emplace_back(j, s);
    return rows; // each row ascending in j because the outer loop is ascending
}

long SparseMat::nnz() const {
    long n = 0;
    for (const auto& c : cols) n += static_cast<long>(c.size());
    return n;
}

int rank(const SparseMat& m) { return rref(m.to_rows(), m.ncols).rank(); }

std::vector<SparseVec> kernel(const SparseMat& m, const Field& f) {
    return kernel_from_rref(rref(m.to_rows(), m.ncols), f);
}

SpanSolver::SpanSolver(const std::vector<SparseVec>& gens, int dim, const Field& f)
    : dim_(dim), ngens_(static_cast<int>(gens.size())), field_(f) {
    std::vector<SparseVec> rows;
    rows.reserve(gens.size());
    for (int k = 0; k < ngens_; ++k) {
        SparseVec row = gens[static_cast<size_t>(k)];
        row.emplace_back(dim_ + k, field_.one());
        rows.push_back(std::move(row));
    }
    rref_ = rref(std::move(rows), dim_ + ngens_);
    rank_ = 0;
    for (int p : rref_.pivot_cols)
        if (p < dim_) ++rank_;
}

std::optional<std::vector<Scalar>> SpanSolver::coords(const SparseVec& v) const {
    // Reduce against main-column pivots only; tail-column pivots belong to
    // dependent generators and must not engage.
    std::map<int, Scalar> acc;
    for (const auto& [col, s] : v) acc[col] = s;
    for (size_t k = 0; k < rref_.pivot_cols.size(); ++k) {
        const int p = rref_.pivot_cols[k];
        if (p >= dim_) break;
        auto it = acc.find(p);
        if (it == acc.end() || it->second.is_zero()) continue;
        const Scalar c = it->second;
        acc.erase(it);
        for (const auto& [col, s] : rref_.rows[k]) {
            if (col == p) continue;
            auto [jt, inserted] = acc.emplace(col, -(c * s));
            if (!inserted) jt->second -= c * s;
        }
    }
    std::vector<Scalar> out(static_cast<size_t>(ngens_), field_.zero());
    for (auto& [col, s] : acc) {
        if (s.is_zero()) continue;
        if (col < dim_) return std::nullopt; // residue outside the span
        out[static_cast<size_t>(col - dim_)] = -s;
    }
    return out;
}

} // namespace pha::linalg
