#include "pha/rtensor.hpp"

#include <algorithm>
#include <sstream>

#include "pha/error.hpp"
#include "pha/parallel.hpp"

namespace pha {

void TensorElement::add(const Tuple& t, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coords.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coords.erase(it);
    }
}

TensorElement& TensorElement::axpy(const Scalar& c, const TensorElement& y) {
    if (level != y.level) throw Error("TensorElement::axpy: level mismatch");
    if (c.is_zero()) return *this;
    for (const auto& [t, s] : y.coords) add(t, c * s);
    return *this;
}

TensorElement TensorElement::operator-(const TensorElement& y) const {
    if (level != y.level) throw Error("TensorElement: level mismatch");
    TensorElement out = *this;
    for (const auto& [t, s] : y.coords) out.add(t, -s);
    return out;
}

// ------------------------------------------------------------- construction

const BasedAlgebra& TensorSpace::slot_algebra() const {
    return level_ == 0 ? *inst_->base : *inst_->total;
}

TensorSpace TensorSpace::build(const ParaHopfInstance& inst, int level, Engine engine) {
    if (level < 0) throw Error("build_tensor_space: negative level");
    if (level > 6) throw Error("build_tensor_space: levels beyond 6 are not supported");
    TensorSpace s;
    s.inst_ = &inst;
    s.level_ = level;
    s.engine_ = engine;

    if (engine == Engine::Quotient) {
        if (!inst.finite())
            throw Error("build_tensor_space: quotient engine requires a finite instance");
        s.finite_ = true;
        const BasedAlgebra& slot = s.slot_algebra();
        s.slot_labels_ = slot.basis();
        std::sort(s.slot_labels_.begin(), s.slot_labels_.end());
        for (size_t i = 0; i < s.slot_labels_.size(); ++i)
            s.slot_rank_[s.slot_labels_[i]] = static_cast<int>(i);

        const long d = static_cast<long>(s.slot_labels_.size());
        const int n = std::max(level, 1);
        long free_dim = 1;
        for (int i = 0; i < n; ++i) free_dim *= d;

        std::vector<linalg::SparseVec> rows;
        if (level >= 2) {
            const long count = s.relation_count();
            rows.assign(static_cast<size_t>(count), {});
            par::for_each_index(count, [&](long k) {
                const FreeTensor ft = s.relation_free(k);
                std::map<int, Scalar> acc;
                for (const auto& [t, c] : ft.terms) {
                    auto [it, inserted] = acc.emplace(static_cast<int>(s.free_index(t)), c);
                    if (!inserted) it->second += c;
                }
                linalg::SparseVec row;
                for (auto& [col, c] : acc)
                    if (!c.is_zero()) row.emplace_back(col, std::move(c));
                rows[static_cast<size_t>(k)] = std::move(row);
            });
        }
        s.relations_ = linalg::rref(std::move(rows), static_cast<int>(free_dim));

        std::vector<bool> is_pivot(static_cast<size_t>(free_dim), false);
        for (int p : s.relations_.pivot_cols) is_pivot[static_cast<size_t>(p)] = true;
        for (long i = 0; i < free_dim; ++i) {
            if (is_pivot[static_cast<size_t>(i)]) continue;
            Tuple t = s.unrank(i);
            s.basis_index_.emplace(t, static_cast<int>(s.basis_.size()));
            s.basis_.push_back(std::move(t));
        }
        return s;
    }

    // normal-form engine
    if (!inst.monomial_backend)
        throw Error("build_tensor_space: instance has no normal-form (monomial) backend");
    s.finite_ = inst.finite();
    if (s.finite_) {
        const int N = inst.torus_order;
        if (level == 0) {
            for (int k = 0; k < N; ++k) s.basis_.push_back(Tuple{BasisId::torus(k, 0)});
        } else {
            // canonical tuples: full monomial in slot 1, V-powers afterwards
            std::vector<Tuple> acc;
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b) acc.push_back(Tuple{BasisId::torus(a, b)});
            for (int slot = 2; slot <= level; ++slot) {
                std::vector<Tuple> next;
                for (const auto& t : acc)
                    for (int m = 0; m < N; ++m) {
                        Tuple u = t;
                        u.push_back(BasisId::torus(0, m));
                        next.push_back(std::move(u));
                    }
                acc = std::move(next);
            }
            s.basis_ = std::move(acc);
        }
        std::sort(s.basis_.begin(), s.basis_.end());
        for (size_t i = 0; i < s.basis_.size(); ++i)
            s.basis_index_.emplace(s.basis_[i], static_cast<int>(i));
    }
    return s;
}

int TensorSpace::dim() const {
    if (!finite_) throw Error("TensorSpace::dim: space is not finite-dimensional");
    return static_cast<int>(basis_.size());
}

const std::vector<Tuple>& TensorSpace::basis() const {
    if (!finite_) throw Error("TensorSpace::basis: space is not finite-dimensional");
    return basis_;
}

int TensorSpace::index_of(const Tuple& t) const {
    auto it = basis_index_.find(t);
    if (it == basis_index_.end()) throw Error("TensorSpace::index_of: not a basis tuple");
    return it->second;
}

long TensorSpace::free_index(const Tuple& t) const {
    const long d = static_cast<long>(slot_labels_.size());
    long idx = 0;
    for (const auto& b : t) {
        auto it = slot_rank_.find(b);
        if (it == slot_rank_.end()) throw Error("TensorSpace: foreign label in tuple");
        idx = idx * d + it->second;
    }
    return idx;
}

Tuple TensorSpace::unrank(long idx) const {
    const long d = static_cast<long>(slot_labels_.size());
    const int n = std::max(level_, 1);
    Tuple t(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        t[static_cast<size_t>(i)] = slot_labels_[static_cast<size_t>(idx % d)];
        idx /= d;
    }
    return t;
}

// ------------------------------------------------------------- relations

long TensorSpace::relation_count() const {
    if (engine_ != Engine::Quotient || level_ < 2) return 0;
    const long d = static_cast<long>(slot_labels_.size());
    long free_dim = 1;
    for (int i = 0; i < level_; ++i) free_dim *= d;
    return static_cast<long>(level_ - 1) * inst_->base->dim() * free_dim;
}

FreeTensor TensorSpace::relation_free(long k) const {
    const long d = static_cast<long>(slot_labels_.size());
    long free_dim = 1;
    for (int i = 0; i < level_; ++i) free_dim *= d;
    const long tuple_idx = k % free_dim;
    const long rest = k / free_dim;
    const int rpos = static_cast<int>(rest % inst_->base->dim());
    const int slot = static_cast<int>(rest / inst_->base->dim()); // 0-based left slot
    if (slot >= level_ - 1) throw Error("relation_free: index out of range");

    const Tuple t = unrank(tuple_idx);
    const BasisId rlab = inst_->base->basis()[static_cast<size_t>(rpos)];
    const Field& f = inst_->field;

    // beta(r) x_slot (x) x_{slot+1}  -  x_slot (x) alpha(r) x_{slot+1}
    std::vector<AlgebraElement> left_factors, right_factors;
    for (int i = 0; i < level_; ++i) {
        AlgebraElement e = AlgebraElement::term(t[static_cast<size_t>(i)], f.one());
        if (i == slot) {
            left_factors.push_back(inst_->total->mul(inst_->beta(rlab), e));
            right_factors.push_back(e);
        } else if (i == slot + 1) {
            left_factors.push_back(e);
            right_factors.push_back(inst_->total->mul(inst_->alpha(rlab), e));
        } else {
            left_factors.push_back(e);
            right_factors.push_back(e);
        }
    }
    FreeTensor out = tensor_expand(left_factors);
    out.axpy(-f.one(), tensor_expand(right_factors));
    return out;
}

std::string TensorSpace::relation_desc(long k) const {
    const long d = static_cast<long>(slot_labels_.size());
    long free_dim = 1;
    for (int i = 0; i < level_; ++i) free_dim *= d;
    const long tuple_idx = k % free_dim;
    const long rest = k / free_dim;
    const int rpos = static_cast<int>(rest % inst_->base->dim());
    const int slot = static_cast<int>(rest / inst_->base->dim());
    const Tuple t = unrank(tuple_idx);
    std::ostringstream out;
    out << "relation[slots " << slot + 1 << "," << slot + 2 << "; r = "
        << inst_->base->label_name(inst_->base->basis()[static_cast<size_t>(rpos)]) << "; "
        << tuple_str(t) << "]";
    return out.str();
}

// ------------------------------------------------------------- projection

std::pair<Scalar, Tuple> TensorSpace::canonicalize(const Tuple& t) const {
    if (engine_ != Engine::NormalForm)
        throw Error("canonicalize: not a normal-form space");
    const Field& f = inst_->field;
    if (level_ == 0) return {f.one(), t};
    const auto* torus = dynamic_cast<const TorusAlgebra*>(inst_->total.get());
    if (!torus) throw Error("canonicalize: monomial backend missing");
    // Push every U-power left into slot 1; front multiplication by a pure
    // U-power never picks up a q factor.
    long u_total = 0;
    Tuple out(t.size());
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i].kind != BasisId::Kind::TorusMon)
            throw Error("canonicalize: foreign label in tuple");
        u_total += t[i].a;
        out[i] = torus->canon_label(0, t[i].b);
    }
    out[0] = torus->canon_label(u_total, t[0].b);
    return {f.one(), out};
}

TensorElement TensorSpace::project(const FreeTensor& ft) const {
    if (ft.level != level_ && !(level_ == 0 && ft.level == 0))
        throw Error("project: free tensor level mismatch");
    TensorElement out;
    out.level = level_;
    if (engine_ == Engine::Quotient) {
        std::map<int, Scalar> acc;
        for (const auto& [t, c] : ft.terms) {
            if (static_cast<int>(t.size()) != std::max(level_, 1))
                throw Error("project: tuple length mismatch");
            auto [it, inserted] = acc.emplace(static_cast<int>(free_index(t)), c);
            if (!inserted) it->second += c;
        }
        linalg::SparseVec v;
        for (auto& [col, c] : acc)
            if (!c.is_zero()) v.emplace_back(col, std::move(c));
        v = relations_.reduce(v);
        for (auto& [col, c] : v) out.coords.emplace(unrank(col), std::move(c));
        return out;
    }
    for (const auto& [t, c] : ft.terms) {
        auto [coeff, canon] = canonicalize(t);
        out.add(canon, c * coeff);
    }
    return out;
}

std::vector<Tuple> TensorSpace::window_tuples(int w) const {
    if (finite_) return basis_;
    if (w < 0) throw Error("window_tuples: negative window");
    std::vector<Tuple> out;
    if (level_ == 0) {
        for (int k = -w; k <= w; ++k) out.push_back(Tuple{BasisId::torus(k, 0)});
        return out;
    }
    std::vector<Tuple> acc;
    for (int a = -w; a <= w; ++a)
        for (int b = -w; b <= w; ++b) acc.push_back(Tuple{BasisId::torus(a, b)});
    for (int slot = 2; slot <= level_; ++slot) {
        std::vector<Tuple> next;
        for (const auto& t : acc)
            for (int m = -w; m <= w; ++m) {
                Tuple u = t;
                u.push_back(BasisId::torus(0, m));
                next.push_back(std::move(u));
            }
        acc = std::move(next);
    }
    return acc;
}

linalg::SparseVec TensorSpace::to_vec(const TensorElement& t) const {
    linalg::SparseVec v;
    for (const auto& [tuple, c] : t.coords) v.emplace_back(index_of(tuple), c);
    // basis_ is sorted by tuple, so map order is index order already
    return v;
}

TensorElement TensorSpace::from_vec(const linalg::SparseVec& v) const {
    TensorElement out;
    out.level = level_;
    for (const auto& [i, c] : v) out.add(basis_.at(static_cast<size_t>(i)), c);
    return out;
}

std::string TensorSpace::tuple_str(const Tuple& t) const {
    const BasedAlgebra& slot = slot_algebra();
    std::ostringstream out;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) out << " (x) ";
        out << slot.label_name(t[i]);
    }
    return out.str();
}

std::string TensorSpace::elem_str(const TensorElement& t) const {
    if (t.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [tuple, c] : t.coords) {
        if (!first) out << " + ";
        const std::string cs = c.str();
        if (cs != "1") out << "(" << cs << ")*";
        out << "[" << tuple_str(tuple) << "]";
        first = false;
    }
    return out.str();
}

// ------------------------------------------------------------- actions

TensorElement right_action(const TensorSpace& space, const TensorElement& t,
                           const std::vector<AlgebraElement>& gs) {
    if (space.level() < 1) throw Error("right_action: needs level >= 1");
    if (static_cast<int>(gs.size()) != space.level())
        throw Error("right_action: factor count must equal the level");
    const Field& f = space.instance().field;
    const BasedAlgebra& h = *space.instance().total;
    TensorElement out = space.zero();
    for (const auto& [tuple, c] : t.coords) {
        std::vector<AlgebraElement> factors;
        factors.reserve(tuple.size());
        for (size_t i = 0; i < tuple.size(); ++i)
            factors.push_back(h.mul(AlgebraElement::term(tuple[i], f.one()), gs[i]));
        out.axpy(c, space.project(tensor_expand(factors)));
    }
    return out;
}

TensorElement diagonal_action(const TensorSpace& space, const AlgebraElement& h,
                              const TensorElement& t) {
    if (space.level() < 1) throw Error("diagonal_action: needs level >= 1");
    const ParaHopfInstance& inst = space.instance();
    const Field& f = inst.field;
    const FreeTensor dh = inst.iterated_coproduct(h, space.level());
    TensorElement out = space.zero();
    for (const auto& [tuple, c] : t.coords) {
        for (const auto& [dt, e] : dh.terms) {
            std::vector<AlgebraElement> factors;
            factors.reserve(tuple.size());
            for (size_t i = 0; i < tuple.size(); ++i)
                factors.push_back(inst.total->mul(AlgebraElement::term(dt[i], f.one()),
                                                  AlgebraElement::term(tuple[i], f.one())));
            out.axpy(c * e, space.project(tensor_expand(factors)));
        }
    }
    return out;
}

TensorElement apply_map(const TensorSpace& src, const TensorSpace& dst,
                        const FreeTupleMap& m, const TensorElement& t) {
    if (m.src_level != src.level() || m.dst_level != dst.level())
        throw Error("apply_map: level mismatch for " + m.name);
    TensorElement out = dst.zero();
    for (const auto& [tuple, c] : t.coords) out.axpy(c, dst.project(m.image(tuple)));
    return out;
}

// ------------------------------------------------------------- well-definedness

namespace {

linalg::SparseMat induced_matrix(const TensorSpace& src, const TensorSpace& dst,
                                 const FreeTupleMap& m) {
    linalg::SparseMat mat = linalg::SparseMat::zero(dst.dim(), src.dim());
    par::for_each_index(src.dim(), [&](long j) {
        FreeTensor ft;
        ft.level = src.level();
        ft.add(src.basis()[static_cast<size_t>(j)], src.instance().field.one());
        TensorElement img = dst.zero();
        for (const auto& [t, c] : ft.terms) img.axpy(c, dst.project(m.image(t)));
        mat.cols[static_cast<size_t>(j)] = dst.to_vec(img);
    });
    return mat;
}

} // namespace

WellDefinedResult verify_well_defined(const TensorSpace& src, const TensorSpace& dst,
                                      const FreeTupleMap& m, int window) {
    WellDefinedResult res;
    const std::string check = "well_defined." + m.name;

    auto image_of_free = [&](const FreeTensor& ft) {
        TensorElement out = dst.zero();
        for (const auto& [t, c] : ft.terms) out.axpy(c, dst.project(m.image(t)));
        return out;
    };

    if (src.engine() == Engine::Quotient) {
        const long count = src.relation_count();
        const long bad = par::first_failure(count, [&](long k) {
            return image_of_free(src.relation_free(k)).is_zero();
        });
        if (bad >= 0) {
            const TensorElement img = image_of_free(src.relation_free(bad));
            Witness w;
            w.inputs = {src.relation_desc(bad)};
            w.lhs = dst.elem_str(img);
            w.rhs = "0";
            w.note = "candidate does not annihilate a relation generator";
            res.report = CheckReport::fail(check, std::move(w), count);
            return res;
        }
        res.report = CheckReport::pass(check, count);
        res.matrix = induced_matrix(src, dst, m);
        return res;
    }

    // Normal-form engine: invariance under single rewriting moves. At
    // levels < 2 there are no relations and any map is vacuously induced.
    if (src.level() >= 2) {
        const std::vector<Tuple> tuples = src.window_tuples(window);
        const int n = src.level();
        std::vector<int> exps;
        if (src.finite()) {
            for (int e = 1; e < src.instance().torus_order; ++e) exps.push_back(e);
        } else {
            for (int e = 1; e <= window; ++e) {
                exps.push_back(e);
                exps.push_back(-e);
            }
        }
        const long cases =
            static_cast<long>(tuples.size()) * (n - 1) * static_cast<long>(exps.size());
        auto decode = [&](long k, Tuple& a, Tuple& b, std::string& desc) {
            const long ti = k % static_cast<long>(tuples.size());
            const long rest = k / static_cast<long>(tuples.size());
            const int slot = static_cast<int>(rest % (n - 1)); // 0-based left slot
            const int e = exps[static_cast<size_t>(rest / (n - 1))];
            const Tuple& t = tuples[static_cast<size_t>(ti)];
            const auto* torus = dynamic_cast<const TorusAlgebra*>(src.instance().total.get());
            a = t; // alpha(U^e) absorbed into the right slot of the pair
            a[static_cast<size_t>(slot + 1)] = torus->canon_label(
                static_cast<long>(a[static_cast<size_t>(slot + 1)].a) + e,
                a[static_cast<size_t>(slot + 1)].b);
            b = t; // beta(U^e) absorbed into the left slot
            b[static_cast<size_t>(slot)] =
                torus->canon_label(static_cast<long>(b[static_cast<size_t>(slot)].a) + e,
                                   b[static_cast<size_t>(slot)].b);
            std::ostringstream o;
            o << "rewrite[slots " << slot + 1 << "," << slot + 2 << "; U^" << e << "; "
              << src.tuple_str(t) << "]";
            desc = o.str();
        };
        const long bad = par::first_failure(cases, [&](long k) {
            Tuple a, b;
            std::string desc;
            decode(k, a, b, desc);
            return dst.project(m.image(a)) == dst.project(m.image(b));
        });
        if (bad >= 0) {
            Tuple a, b;
            std::string desc;
            decode(bad, a, b, desc);
            Witness w;
            w.inputs = {desc};
            w.lhs = dst.elem_str(dst.project(m.image(a)));
            w.rhs = dst.elem_str(dst.project(m.image(b)));
            w.note = "candidate is not invariant under rewriting";
            res.report = CheckReport::fail(check, std::move(w), cases);
            return res;
        }
        if (src.finite()) res.report = CheckReport::pass(check, cases);
        else
            res.report = CheckReport::pass_on_window(
                check, cases, "window tuples, moved exponents <= " + std::to_string(window));
    } else {
        res.report = src.finite() ? CheckReport::pass(check, 0)
                                  : CheckReport::pass_on_window(check, 0,
                                                                "level < 2: no relations");
    }
    if (src.finite() && dst.finite()) res.matrix = induced_matrix(src, dst, m);
    return res;
}

} // namespace pha
