#include "pha/instance.hpp"

#include <map>
#include <set>
#include <sstream>

#include "pha/error.hpp"

namespace pha {

namespace {

// Apply a coproduct to slot 1 of a free tensor, raising the level by one.
FreeTensor expand_slot1(const FreeTensor& t,
                        const std::function<FreeTensor(const BasisId&)>& cop) {
    FreeTensor out;
    out.level = t.level + 1;
    for (const auto& [tuple, c] : t.terms) {
        const FreeTensor d = cop(tuple[0]);
        for (const auto& [pair, e] : d.terms) {
            Tuple nt;
            nt.reserve(tuple.size() + 1);
            nt.push_back(pair[0]);
            nt.push_back(pair[1]);
            for (size_t i = 1; i < tuple.size(); ++i) nt.push_back(tuple[i]);
            out.add(nt, c * e);
        }
    }
    return out;
}

FreeTensor iterate_coproduct(const AlgebraElement& x, int n,
                             const std::function<FreeTensor(const BasisId&)>& cop) {
    if (n < 1) throw Error("iterated coproduct: level must be >= 1");
    FreeTensor t;
    t.level = 1;
    for (const auto& [b, c] : x.terms()) t.add(Tuple{b}, c);
    for (int k = 1; k < n; ++k) t = expand_slot1(t, cop);
    return t;
}

} // namespace

// ------------------------------------------------------------- Hopf data

FreeTensor HopfAlgebraData::coproduct_elem(const AlgebraElement& x) const {
    FreeTensor out;
    out.level = 2;
    for (const auto& [b, c] : x.terms())
        out.axpy(c, coproduct[static_cast<size_t>(algebra->index_of(b))]);
    return out;
}

Scalar HopfAlgebraData::counit_elem(const AlgebraElement& x) const {
    Scalar s = field().zero();
    for (const auto& [b, c] : x.terms())
        s += c * counit[static_cast<size_t>(algebra->index_of(b))];
    return s;
}

Scalar HopfAlgebraData::character_elem(const AlgebraElement& x) const {
    Scalar s = field().zero();
    for (const auto& [b, c] : x.terms())
        s += c * character[static_cast<size_t>(algebra->index_of(b))];
    return s;
}

AlgebraElement HopfAlgebraData::antipode_elem(const AlgebraElement& x) const {
    AlgebraElement out;
    for (const auto& [b, c] : x.terms())
        out.axpy(c, antipode[static_cast<size_t>(algebra->index_of(b))]);
    return out;
}

AlgebraElement HopfAlgebraData::twisted_antipode(const AlgebraElement& x) const {
    // (delta * S)(h) = delta(h^(1)) S(h^(2))
    AlgebraElement out;
    const FreeTensor d = coproduct_elem(x);
    for (const auto& [t, c] : d.terms) {
        const Scalar dc = character[static_cast<size_t>(algebra->index_of(t[0]))];
        out.axpy(c * dc, antipode[static_cast<size_t>(algebra->index_of(t[1]))]);
    }
    return out;
}

FreeTensor HopfAlgebraData::iterated_coproduct(const AlgebraElement& x, int n) const {
    return iterate_coproduct(x, n, [this](const BasisId& b) {
        return coproduct[static_cast<size_t>(algebra->index_of(b))];
    });
}

std::vector<CheckReport> HopfAlgebraData::validate() const {
    std::vector<CheckReport> out;
    const int n = dim();
    const auto& bs = algebra->basis();
    const Field& f = field();

    out.push_back(check_associativity_unit(*algebra, 0));

    auto elem = [&](int i) { return AlgebraElement::term(bs[static_cast<size_t>(i)], f.one()); };

    // coassociativity as free 3-tensors over k
    {
        long cases = 0;
        for (int i = 0; i < n; ++i) {
            FreeTensor left = iterated_coproduct(elem(i), 3); // (Delta (x) id) Delta
            // (id (x) Delta) Delta
            FreeTensor right;
            right.level = 3;
            const FreeTensor d = coproduct[static_cast<size_t>(i)];
            for (const auto& [t, c] : d.terms) {
                const FreeTensor e = coproduct[static_cast<size_t>(algebra->index_of(t[1]))];
                for (const auto& [u, w] : e.terms)
                    right.add(Tuple{t[0], u[0], u[1]}, c * w);
            }
            ++cases;
            if (!(left == right)) {
                Witness wit{{algebra->label_name(bs[static_cast<size_t>(i)])}, "", "",
                            "coassociativity violated"};
                out.push_back(CheckReport::fail("hopf.coassoc", std::move(wit), cases));
                break;
            }
        }
        if (out.size() < 2 || out.back().name != "hopf.coassoc")
            out.push_back(CheckReport::pass("hopf.coassoc", cases));
    }

    // counit laws
    {
        long cases = 0;
        bool failed = false;
        for (int i = 0; i < n && !failed; ++i) {
            AlgebraElement left, right;
            for (const auto& [t, c] : coproduct[static_cast<size_t>(i)].terms) {
                left.axpy(c * counit[static_cast<size_t>(algebra->index_of(t[0]))],
                          AlgebraElement::term(t[1], f.one()));
                right.axpy(c * counit[static_cast<size_t>(algebra->index_of(t[1]))],
                           AlgebraElement::term(t[0], f.one()));
            }
            ++cases;
            if (!(left == elem(i)) || !(right == elem(i))) {
                Witness wit{{algebra->label_name(bs[static_cast<size_t>(i)])},
                            algebra->elem_str(left), algebra->elem_str(right),
                            "counit law violated"};
                out.push_back(CheckReport::fail("hopf.counit", std::move(wit), cases));
                failed = true;
            }
        }
        if (!failed) out.push_back(CheckReport::pass("hopf.counit", cases));
    }

    // Delta and eps are algebra maps
    {
        long cases = 0;
        bool failed = false;
        for (int i = 0; i < n && !failed; ++i) {
            for (int j = 0; j < n && !failed; ++j) {
                const AlgebraElement prod = algebra->basis_product(bs[static_cast<size_t>(i)],
                                                                   bs[static_cast<size_t>(j)]);
                FreeTensor lhs = coproduct_elem(prod);
                FreeTensor rhs;
                rhs.level = 2;
                for (const auto& [t1, c1] : coproduct[static_cast<size_t>(i)].terms)
                    for (const auto& [t2, c2] : coproduct[static_cast<size_t>(j)].terms)
                        rhs.axpy(c1 * c2,
                                 tensor_expand({algebra->basis_product(t1[0], t2[0]),
                                                algebra->basis_product(t1[1], t2[1])}));
                const Scalar el = counit_elem(prod);
                const Scalar er = counit[static_cast<size_t>(i)] * counit[static_cast<size_t>(j)];
                ++cases;
                if (!(lhs == rhs) || !(el == er)) {
                    Witness wit{{algebra->label_name(bs[static_cast<size_t>(i)]),
                                 algebra->label_name(bs[static_cast<size_t>(j)])},
                                "", "", "coproduct/counit not multiplicative"};
                    out.push_back(
                        CheckReport::fail("hopf.multiplicative", std::move(wit), cases));
                    failed = true;
                }
            }
        }
        if (!failed) out.push_back(CheckReport::pass("hopf.multiplicative", cases));
    }

    // antipode convolution identities
    {
        long cases = 0;
        bool failed = false;
        for (int i = 0; i < n && !failed; ++i) {
            AlgebraElement left, right;
            for (const auto& [t, c] : coproduct[static_cast<size_t>(i)].terms) {
                left.axpy(c, algebra->mul(antipode_elem(AlgebraElement::term(t[0], f.one())),
                                          AlgebraElement::term(t[1], f.one())));
                right.axpy(c, algebra->mul(AlgebraElement::term(t[0], f.one()),
                                           antipode_elem(AlgebraElement::term(t[1], f.one()))));
            }
            const AlgebraElement expect = algebra->unit().scaled(counit[static_cast<size_t>(i)]);
            ++cases;
            if (!(left == expect) || !(right == expect)) {
                Witness wit{{algebra->label_name(bs[static_cast<size_t>(i)])},
                            algebra->elem_str(left), algebra->elem_str(expect),
                            "antipode convolution identity violated"};
                out.push_back(CheckReport::fail("hopf.antipode", std::move(wit), cases));
                failed = true;
            }
        }
        if (!failed) out.push_back(CheckReport::pass("hopf.antipode", cases));
    }

    // delta is an algebra map
    {
        long cases = 0;
        bool failed = false;
        if (!(character_elem(algebra->unit()) == f.one())) {
            out.push_back(CheckReport::fail(
                "hopf.character", Witness{{"1"}, character_elem(algebra->unit()).str(), "1",
                                          "delta(1) != 1"}));
            failed = true;
        }
        for (int i = 0; i < n && !failed; ++i) {
            for (int j = 0; j < n && !failed; ++j) {
                const Scalar lhs = character_elem(algebra->basis_product(
                    bs[static_cast<size_t>(i)], bs[static_cast<size_t>(j)]));
                const Scalar rhs =
                    character[static_cast<size_t>(i)] * character[static_cast<size_t>(j)];
                ++cases;
                if (!(lhs == rhs)) {
                    Witness wit{{algebra->label_name(bs[static_cast<size_t>(i)]),
                                 algebra->label_name(bs[static_cast<size_t>(j)])},
                                lhs.str(), rhs.str(), "delta not multiplicative"};
                    out.push_back(CheckReport::fail("hopf.character", std::move(wit), cases));
                    failed = true;
                }
            }
        }
        if (!failed) out.push_back(CheckReport::pass("hopf.character", cases));
    }

    // twisted antipode is involutive
    {
        long cases = 0;
        bool failed = false;
        for (int i = 0; i < n && !failed; ++i) {
            const AlgebraElement tw = twisted_antipode(twisted_antipode(elem(i)));
            ++cases;
            if (!(tw == elem(i))) {
                Witness wit{{algebra->label_name(bs[static_cast<size_t>(i)])},
                            algebra->elem_str(tw),
                            algebra->elem_str(elem(i)),
                            "twisted antipode is not involutive"};
                out.push_back(CheckReport::fail("hopf.twisted_involutive", std::move(wit), cases));
                failed = true;
            }
        }
        if (!failed) out.push_back(CheckReport::pass("hopf.twisted_involutive", cases));
    }

    return out;
}

HopfAlgebraData make_cyclic_group_hopf(const Field& f, int order, std::vector<Scalar> delta) {
    if (order < 1) throw Error("make_cyclic_group_hopf: order must be >= 1");
    if (delta.size() != static_cast<size_t>(order))
        throw Error("make_cyclic_group_hopf: delta must list one value per group element");
    std::vector<BasisId> basis;
    std::vector<std::string> names;
    for (int i = 0; i < order; ++i) {
        basis.push_back(BasisId::raw(i));
        names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    }
    std::vector<std::vector<AlgebraElement>> table(
        static_cast<size_t>(order), std::vector<AlgebraElement>(static_cast<size_t>(order)));
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            table[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                AlgebraElement::term(BasisId::raw((i + j) % order), f.one());
    auto alg = std::make_shared<FiniteAlgebra>(
        f, basis, names, AlgebraElement::term(BasisId::raw(0), f.one()), table);

    HopfAlgebraData h;
    h.algebra = alg;
    for (int i = 0; i < order; ++i) {
        FreeTensor d;
        d.level = 2;
        d.add(Tuple{basis[static_cast<size_t>(i)], basis[static_cast<size_t>(i)]}, f.one());
        h.coproduct.push_back(std::move(d));
        h.counit.push_back(f.one());
        h.antipode.push_back(
            AlgebraElement::term(BasisId::raw((order - i) % order), f.one()));
    }
    h.character = std::move(delta);
    return h;
}

// ------------------------------------------------------------- instance basics

AlgebraElement ParaHopfInstance::alpha_elem(const AlgebraElement& r) const {
    AlgebraElement out;
    for (const auto& [b, c] : r.terms()) out.axpy(c, alpha(b));
    return out;
}

AlgebraElement ParaHopfInstance::beta_elem(const AlgebraElement& r) const {
    AlgebraElement out;
    for (const auto& [b, c] : r.terms()) out.axpy(c, beta(b));
    return out;
}

FreeTensor ParaHopfInstance::coproduct_elem(const AlgebraElement& h) const {
    FreeTensor out;
    out.level = 2;
    for (const auto& [b, c] : h.terms()) out.axpy(c, coproduct(b));
    return out;
}

AlgebraElement ParaHopfInstance::counit_elem(const AlgebraElement& h) const {
    AlgebraElement out;
    for (const auto& [b, c] : h.terms()) out.axpy(c, counit(b));
    return out;
}

AlgebraElement ParaHopfInstance::antipode_elem(const AlgebraElement& h) const {
    AlgebraElement out;
    for (const auto& [b, c] : h.terms()) out.axpy(c, para_antipode(b));
    return out;
}

AlgebraElement ParaHopfInstance::haar_elem(const AlgebraElement& h) const {
    if (!haar) throw Error("instance has no Haar functional");
    AlgebraElement out;
    for (const auto& [b, c] : h.terms()) out.axpy(c, haar(b));
    return out;
}

FreeTensor ParaHopfInstance::iterated_coproduct(const AlgebraElement& h, int n) const {
    return iterate_coproduct(h, n, coproduct);
}

// ------------------------------------------------------------- groupoid

GroupoidData make_pair_groupoid(int n_objects) {
    if (n_objects < 1) throw Error("make_pair_groupoid: need at least one object");
    GroupoidData g;
    g.n_objects = n_objects;
    // one morphism Y -> X per ordered pair (X, Y)
    auto idx = [n_objects](int x, int y) { return x * n_objects + y; };
    for (int x = 0; x < n_objects; ++x)
        for (int y = 0; y < n_objects; ++y) {
            GroupoidData::Mor m;
            m.src = y;
            m.tgt = x;
            m.name = (x == y) ? "id" + std::to_string(x)
                              : "g" + std::to_string(x) + std::to_string(y);
            g.morphisms.push_back(m);
        }
    const int n = n_objects * n_objects;
    g.compose.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
    for (int x = 0; x < n_objects; ++x)
        for (int y = 0; y < n_objects; ++y)
            for (int z = 0; z < n_objects; ++z)
                g.compose[static_cast<size_t>(idx(x, y))][static_cast<size_t>(idx(y, z))] =
                    idx(x, z);
    return g;
}

GroupoidData make_cyclic_group_groupoid(int order) {
    if (order < 1) throw Error("make_cyclic_group_groupoid: order must be >= 1");
    GroupoidData g;
    g.n_objects = 1;
    for (int i = 0; i < order; ++i) {
        GroupoidData::Mor m;
        m.src = 0;
        m.tgt = 0;
        m.name = i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i));
        g.morphisms.push_back(m);
    }
    g.compose.assign(static_cast<size_t>(order),
                     std::vector<int>(static_cast<size_t>(order), -1));
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            g.compose[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % order;
    return g;
}

namespace {

struct GroupoidShape {
    std::vector<int> identity_of_object; // object -> morphism index
    std::vector<int> inverse;            // morphism -> morphism index
};

GroupoidShape validate_groupoid(const GroupoidData& g) {
    const int n = static_cast<int>(g.morphisms.size());
    if (g.n_objects < 1 || n == 0) throw Error("groupoid: empty object or morphism set");
    if (g.compose.size() != static_cast<size_t>(n))
        throw Error("groupoid: composition table has wrong size");
    for (const auto& row : g.compose)
        if (row.size() != static_cast<size_t>(n))
            throw Error("groupoid: composition table has wrong size");
    for (const auto& m : g.morphisms)
        if (m.src < 0 || m.src >= g.n_objects || m.tgt < 0 || m.tgt >= g.n_objects)
            throw Error("groupoid: morphism endpoints out of range");

    auto src = [&](int i) { return g.morphisms[static_cast<size_t>(i)].src; };
    auto tgt = [&](int i) { return g.morphisms[static_cast<size_t>(i)].tgt; };
    auto comp = [&](int i, int j) { return g.compose[static_cast<size_t>(i)][static_cast<size_t>(j)]; };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int c = comp(i, j);
            const bool composable = src(i) == tgt(j);
            if (composable != (c >= 0))
                throw Error("groupoid: ill-formed composition (definedness pattern)");
            if (c >= 0) {
                if (c >= n) throw Error("groupoid: composition index out of range");
                if (src(c) != src(j) || tgt(c) != tgt(i))
                    throw Error("groupoid: ill-formed composition (endpoints)");
            }
        }

    // associativity on all composable triples
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (src(i) != tgt(j)) continue;
            for (int k = 0; k < n; ++k) {
                if (src(j) != tgt(k)) continue;
                if (comp(comp(i, j), k) != comp(i, comp(j, k)))
                    throw Error("groupoid: ill-formed composition (associativity)");
            }
        }

    GroupoidShape shape;
    shape.identity_of_object.assign(static_cast<size_t>(g.n_objects), -1);
    for (int x = 0; x < g.n_objects; ++x) {
        for (int e = 0; e < n; ++e) {
            if (src(e) != x || tgt(e) != x) continue;
            bool is_id = true;
            for (int m = 0; m < n && is_id; ++m) {
                if (tgt(m) == x && comp(e, m) != m) is_id = false;
                if (src(m) == x && comp(m, e) != m) is_id = false;
            }
            if (is_id) {
                shape.identity_of_object[static_cast<size_t>(x)] = e;
                break;
            }
        }
        if (shape.identity_of_object[static_cast<size_t>(x)] < 0)
            throw Error("groupoid: object " + std::to_string(x) + " has no identity morphism");
    }

    shape.inverse.assign(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (src(j) != tgt(i) || tgt(j) != src(i)) continue;
            if (comp(i, j) == shape.identity_of_object[static_cast<size_t>(tgt(i))] &&
                comp(j, i) == shape.identity_of_object[static_cast<size_t>(src(i))]) {
                shape.inverse[static_cast<size_t>(i)] = j;
                break;
            }
        }
        if (shape.inverse[static_cast<size_t>(i)] < 0)
            throw Error("groupoid: morphism " + g.morphisms[static_cast<size_t>(i)].name +
                        " is not invertible");
    }
    return shape;
}

} // namespace

ParaHopfInstance build_groupoid(const GroupoidData& g,
                                std::optional<std::vector<int>> t_override,
                                const std::string& name) {
    const GroupoidShape shape = validate_groupoid(g);
    const Field f = Field::rationals();
    const int n = static_cast<int>(g.morphisms.size());

    std::vector<BasisId> hbasis;
    std::vector<std::string> hnames;
    for (int i = 0; i < n; ++i) {
        const auto& m = g.morphisms[static_cast<size_t>(i)];
        hbasis.push_back(BasisId::groupoid_mor(m.src, m.tgt, i));
        hnames.push_back(m.name);
    }

    AlgebraElement hunit;
    for (int x = 0; x < g.n_objects; ++x)
        hunit.add(hbasis[static_cast<size_t>(shape.identity_of_object[static_cast<size_t>(x)])],
                  f.one());

    std::vector<std::vector<AlgebraElement>> htable(
        static_cast<size_t>(n), std::vector<AlgebraElement>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int c = g.compose[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (c >= 0)
                htable[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    AlgebraElement::term(hbasis[static_cast<size_t>(c)], f.one());
        }
    auto total = std::make_shared<FiniteAlgebra>(f, hbasis, hnames, hunit, htable);

    // base algebra kS spanned by the identity morphisms
    std::vector<BasisId> rbasis;
    std::vector<std::string> rnames;
    for (int x = 0; x < g.n_objects; ++x) {
        const int e = shape.identity_of_object[static_cast<size_t>(x)];
        rbasis.push_back(hbasis[static_cast<size_t>(e)]);
        rnames.push_back(hnames[static_cast<size_t>(e)]);
    }
    std::vector<std::vector<AlgebraElement>> rtable(
        static_cast<size_t>(g.n_objects),
        std::vector<AlgebraElement>(static_cast<size_t>(g.n_objects)));
    AlgebraElement runit;
    for (int x = 0; x < g.n_objects; ++x) {
        runit.add(rbasis[static_cast<size_t>(x)], f.one());
        rtable[static_cast<size_t>(x)][static_cast<size_t>(x)] =
            AlgebraElement::term(rbasis[static_cast<size_t>(x)], f.one());
    }
    auto base = std::make_shared<FiniteAlgebra>(f, rbasis, rnames, runit, rtable);

    if (t_override && t_override->size() != static_cast<size_t>(n))
        throw Error("groupoid: T override must list one morphism per morphism");

    ParaHopfInstance inst;
    inst.name = name;
    inst.kind = "groupoid";
    inst.field = f;
    inst.total = total;
    inst.base = base;
    inst.alpha = [f](const BasisId& b) { return AlgebraElement::term(b, f.one()); };
    inst.beta = inst.alpha;
    inst.coproduct = [f](const BasisId& b) {
        FreeTensor t;
        t.level = 2;
        t.add(Tuple{b, b}, f.one());
        return t;
    };
    {
        std::vector<BasisId> counit_of(static_cast<size_t>(n));
        std::vector<BasisId> t_of(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            const int e = shape.identity_of_object[static_cast<size_t>(
                g.morphisms[static_cast<size_t>(i)].tgt)];
            counit_of[static_cast<size_t>(i)] = hbasis[static_cast<size_t>(e)];
            const int t = t_override ? (*t_override)[static_cast<size_t>(i)]
                                     : shape.inverse[static_cast<size_t>(i)];
            if (t < 0 || t >= n) throw Error("groupoid: T override index out of range");
            t_of[static_cast<size_t>(i)] = hbasis[static_cast<size_t>(t)];
        }
        auto cmap = std::make_shared<std::map<BasisId, BasisId>>();
        auto tmap = std::make_shared<std::map<BasisId, BasisId>>();
        for (int i = 0; i < n; ++i) {
            cmap->emplace(hbasis[static_cast<size_t>(i)], counit_of[static_cast<size_t>(i)]);
            tmap->emplace(hbasis[static_cast<size_t>(i)], t_of[static_cast<size_t>(i)]);
        }
        inst.counit = [f, cmap](const BasisId& b) {
            return AlgebraElement::term(cmap->at(b), f.one());
        };
        inst.para_antipode = [f, tmap](const BasisId& b) {
            return AlgebraElement::term(tmap->at(b), f.one());
        };
        auto idset = std::make_shared<std::set<BasisId>>(rbasis.begin(), rbasis.end());
        inst.haar = [f, idset](const BasisId& b) {
            if (idset->count(b)) return AlgebraElement::term(b, f.one());
            return AlgebraElement();
        };
    }
    for (const auto& b : hbasis) inst.generators.push_back(AlgebraElement::term(b, f.one()));
    return inst;
}

// ------------------------------------------------------------- quantum torus

ParaHopfInstance build_quantum_torus(int n, const std::string& name) {
    if (n != 0 && n < 2) throw Error("build_quantum_torus: order must be 0 (formal) or >= 2");
    const Field f = n == 0 ? Field::formal_q() : Field::cyclotomic(n);
    auto total = std::make_shared<TorusAlgebra>(f, n);
    auto base = std::make_shared<LaurentAlgebra>(f, n);

    ParaHopfInstance inst;
    inst.name = name;
    inst.kind = "quantum_torus";
    inst.field = f;
    inst.total = total;
    inst.base = base;
    inst.monomial_backend = true;
    inst.torus_order = n;
    inst.alpha = [f](const BasisId& b) { return AlgebraElement::term(b, f.one()); };
    inst.beta = inst.alpha;
    inst.coproduct = [f, total](const BasisId& b) {
        // Delta(U^n V^m) = U^n V^m (x) V^m
        FreeTensor t;
        t.level = 2;
        t.add(Tuple{b, total->canon_label(0, b.b)}, f.one());
        return t;
    };
    inst.counit = [f, base](const BasisId& b) {
        // eps(U^n V^m) = U^n
        return AlgebraElement::term(base->canon_label(b.a), f.one());
    };
    inst.para_antipode = [f, total](const BasisId& b) {
        // T(U^n V^m) = q^{nm} U^n V^{-m}
        return AlgebraElement::term(total->canon_label(b.a, -static_cast<long>(b.b)),
                                    f.q_pow(static_cast<long>(b.a) * b.b));
    };
    inst.haar = [f, base](const BasisId& b) {
        // tau(U^n V^m) = [m = 0] U^n
        if (b.b != 0) return AlgebraElement();
        return AlgebraElement::term(base->canon_label(b.a), f.one());
    };
    inst.generators.push_back(AlgebraElement::term(total->canon_label(1, 0), f.one()));
    inst.generators.push_back(AlgebraElement::term(total->canon_label(-1, 0), f.one()));
    inst.generators.push_back(AlgebraElement::term(total->canon_label(0, 1), f.one()));
    inst.generators.push_back(AlgebraElement::term(total->canon_label(0, -1), f.one()));
    return inst;
}

// ------------------------------------------------------------- sandwich

namespace {

void require_valid_hopf(const HopfAlgebraData& hopf, const std::string& who) {
    auto reports = hopf.validate();
    for (const auto& r : reports)
        if (!r.ok())
            throw Error(who + ": Hopf data fails " + r.name +
                        (r.witness ? " (" + r.witness->note + ")" : ""));
}

// expand a (x) h (x) b into a combination of triple labels
AlgebraElement triple_expand(const BasedAlgebra& left, const BasedAlgebra& mid,
                             const BasedAlgebra& right, BasisId::Kind kind,
                             const AlgebraElement& a, const AlgebraElement& h,
                             const AlgebraElement& b) {
    AlgebraElement out;
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lh, ch] : h.terms())
            for (const auto& [lb, cb] : b.terms()) {
                BasisId id{};
                id.kind = kind;
                id.a = left.index_of(la);
                id.b = mid.index_of(lh);
                id.c = right.index_of(lb);
                out.add(id, ca * ch * cb);
            }
    return out;
}

} // namespace

ParaHopfInstance build_sandwich(std::shared_ptr<const FiniteAlgebra> base,
                                HopfAlgebraData hopf, const std::string& name) {
    if (!(base->field() == hopf.field()))
        throw Error("build_sandwich: base and Hopf fields differ");
    require_valid_hopf(hopf, "build_sandwich");
    const Field f = base->field();
    const int nr = base->dim();
    const int nh = hopf.dim();
    auto hopf_ptr = std::make_shared<HopfAlgebraData>(std::move(hopf));
    const auto& hd = *hopf_ptr;

    std::vector<BasisId> basis;
    std::vector<std::string> names;
    for (int l = 0; l < nr; ++l)
        for (int h = 0; h < nh; ++h)
            for (int r = 0; r < nr; ++r) {
                basis.push_back(BasisId::sandwich(l, h, r));
                names.push_back(
                    "(" + base->label_name(base->basis()[static_cast<size_t>(l)]) + "|" +
                    hd.algebra->label_name(hd.algebra->basis()[static_cast<size_t>(h)]) + "|" +
                    base->label_name(base->basis()[static_cast<size_t>(r)]) + ")");
            }
    const int dim = nr * nh * nr;

    auto elem_r = [&](int i) {
        return AlgebraElement::term(base->basis()[static_cast<size_t>(i)], f.one());
    };
    auto elem_h = [&](int i) {
        return AlgebraElement::term(hd.algebra->basis()[static_cast<size_t>(i)], f.one());
    };
    auto triple = [&](const AlgebraElement& a, const AlgebraElement& h,
                      const AlgebraElement& b) {
        return triple_expand(*base, *hd.algebra, *base, BasisId::Kind::SandwichTriple, a, h, b);
    };

    std::vector<std::vector<AlgebraElement>> table(
        static_cast<size_t>(dim), std::vector<AlgebraElement>(static_cast<size_t>(dim)));
    for (int i = 0; i < dim; ++i) {
        const BasisId& x = basis[static_cast<size_t>(i)];
        for (int j = 0; j < dim; ++j) {
            const BasisId& y = basis[static_cast<size_t>(j)];
            // (a|h|b)(a'|h'|b') = aa' | hh' | b'b   (opposite product on the right)
            table[static_cast<size_t>(i)][static_cast<size_t>(j)] = triple(
                base->basis_product(base->basis()[static_cast<size_t>(x.a)],
                                    base->basis()[static_cast<size_t>(y.a)]),
                hd.algebra->basis_product(hd.algebra->basis()[static_cast<size_t>(x.b)],
                                          hd.algebra->basis()[static_cast<size_t>(y.b)]),
                base->basis_product(base->basis()[static_cast<size_t>(y.c)],
                                    base->basis()[static_cast<size_t>(x.c)]));
        }
    }
    AlgebraElement unit = triple(base->unit(), hd.algebra->unit(), base->unit());
    auto total = std::make_shared<FiniteAlgebra>(f, basis, names, unit, table);

    ParaHopfInstance inst;
    inst.name = name;
    inst.kind = "sandwich";
    inst.field = f;
    inst.total = total;
    inst.base = base;
    inst.hopf = hopf_ptr;
    inst.alpha = [=](const BasisId& rb) {
        return triple_expand(*base, *hopf_ptr->algebra, *base, BasisId::Kind::SandwichTriple,
                             AlgebraElement::term(rb, f.one()), hopf_ptr->algebra->unit(),
                             base->unit());
    };
    inst.beta = [=](const BasisId& rb) {
        return triple_expand(*base, *hopf_ptr->algebra, *base, BasisId::Kind::SandwichTriple,
                             base->unit(), hopf_ptr->algebra->unit(),
                             AlgebraElement::term(rb, f.one()));
    };
    inst.coproduct = [=](const BasisId& x) {
        // Delta(a|h|b) = (a|h1|1) (x) (1|h2|b)
        FreeTensor out;
        out.level = 2;
        const auto& hb = hopf_ptr->algebra->basis();
        const FreeTensor& d = hopf_ptr->coproduct[static_cast<size_t>(x.b)];
        for (const auto& [t, c] : d.terms) {
            AlgebraElement leftleg = triple_expand(
                *base, *hopf_ptr->algebra, *base, BasisId::Kind::SandwichTriple,
                AlgebraElement::term(base->basis()[static_cast<size_t>(x.a)], f.one()),
                AlgebraElement::term(t[0], f.one()), base->unit());
            AlgebraElement rightleg = triple_expand(
                *base, *hopf_ptr->algebra, *base, BasisId::Kind::SandwichTriple, base->unit(),
                AlgebraElement::term(t[1], f.one()),
                AlgebraElement::term(base->basis()[static_cast<size_t>(x.c)], f.one()));
            out.axpy(c, tensor_expand({leftleg, rightleg}));
        }
        (void)hb;
        return out;
    };
    inst.counit = [=](const BasisId& x) {
        // eps(a|h|b) = eps(h) ab
        const Scalar e = hopf_ptr->counit[static_cast<size_t>(x.b)];
        return base->basis_product(base->basis()[static_cast<size_t>(x.a)],
                                   base->basis()[static_cast<size_t>(x.c)])
            .scaled(e);
    };
    inst.para_antipode = [=](const BasisId& x) {
        // T(a|h|b) = b | twisted_S(h) | a
        const AlgebraElement tw = hopf_ptr->twisted_antipode(
            AlgebraElement::term(hopf_ptr->algebra->basis()[static_cast<size_t>(x.b)], f.one()));
        return triple_expand(
            *base, *hopf_ptr->algebra, *base, BasisId::Kind::SandwichTriple,
            AlgebraElement::term(base->basis()[static_cast<size_t>(x.c)], f.one()), tw,
            AlgebraElement::term(base->basis()[static_cast<size_t>(x.a)], f.one()));
    };
    for (int l = 0; l < nr; ++l) inst.generators.push_back(inst.alpha(base->basis()[static_cast<size_t>(l)]));
    for (int r = 0; r < nr; ++r) inst.generators.push_back(inst.beta(base->basis()[static_cast<size_t>(r)]));
    for (int h = 0; h < nh; ++h)
        inst.generators.push_back(triple(base->unit(), elem_h(h), base->unit()));
    (void)elem_r;
    return inst;
}

// ------------------------------------------------------------- double crossed

ParaHopfInstance build_double_crossed(std::shared_ptr<const FiniteAlgebra> p,
                                      HopfAlgebraData hopf,
                                      std::vector<std::vector<AlgebraElement>> action,
                                      const std::string& name) {
    if (!(p->field() == hopf.field()))
        throw Error("build_double_crossed: module algebra and Hopf fields differ");
    require_valid_hopf(hopf, "build_double_crossed");
    const Field f = p->field();
    const int np = p->dim();
    const int nh = hopf.dim();
    if (action.size() != static_cast<size_t>(nh))
        throw Error("build_double_crossed: action table has wrong Hopf dimension");
    for (const auto& row : action) {
        if (row.size() != static_cast<size_t>(np))
            throw Error("build_double_crossed: action table has wrong module dimension");
        for (const auto& e : row) p->require_member(e);
    }
    auto hopf_ptr = std::make_shared<HopfAlgebraData>(std::move(hopf));
    auto action_ptr =
        std::make_shared<std::vector<std::vector<AlgebraElement>>>(std::move(action));
    const auto& hd = *hopf_ptr;

    auto act = [=](const AlgebraElement& h, const AlgebraElement& x) {
        AlgebraElement out;
        for (const auto& [hb, hc] : h.terms()) {
            const int hi = hd.algebra->index_of(hb);
            for (const auto& [xb, xc] : x.terms()) {
                const int xi = p->index_of(xb);
                out.axpy(hc * xc,
                         (*action_ptr)[static_cast<size_t>(hi)][static_cast<size_t>(xi)]);
            }
        }
        return out;
    };

    auto elem_p = [&](int i) {
        return AlgebraElement::term(p->basis()[static_cast<size_t>(i)], f.one());
    };
    auto elem_h = [&](int i) {
        return AlgebraElement::term(hd.algebra->basis()[static_cast<size_t>(i)], f.one());
    };

    // module algebra laws
    for (int i = 0; i < np; ++i)
        if (!(act(hd.algebra->unit(), elem_p(i)) == elem_p(i)))
            throw Error("build_double_crossed: unit of H does not act as identity");
    for (int hi = 0; hi < nh; ++hi) {
        const AlgebraElement lhs = act(elem_h(hi), p->unit());
        const AlgebraElement rhs = p->unit().scaled(hd.counit[static_cast<size_t>(hi)]);
        if (!(lhs == rhs))
            throw Error("build_double_crossed: action violates h(1) = eps(h) 1");
        for (int hj = 0; hj < nh; ++hj) {
            const AlgebraElement hh = hd.algebra->basis_product(
                hd.algebra->basis()[static_cast<size_t>(hi)],
                hd.algebra->basis()[static_cast<size_t>(hj)]);
            for (int pi = 0; pi < np; ++pi)
                if (!(act(hh, elem_p(pi)) == act(elem_h(hi), act(elem_h(hj), elem_p(pi)))))
                    throw Error("build_double_crossed: action is not associative");
        }
        for (int pi = 0; pi < np; ++pi)
            for (int pj = 0; pj < np; ++pj) {
                const AlgebraElement lhs2 =
                    act(elem_h(hi), p->mul(elem_p(pi), elem_p(pj)));
                AlgebraElement rhs2;
                for (const auto& [t, c] : hd.coproduct[static_cast<size_t>(hi)].terms)
                    rhs2.axpy(c, p->mul(act(AlgebraElement::term(t[0], f.one()), elem_p(pi)),
                                        act(AlgebraElement::term(t[1], f.one()), elem_p(pj))));
                if (!(lhs2 == rhs2))
                    throw Error(
                        "build_double_crossed: action fails the module-algebra law "
                        "h(PQ) = h1(P) h2(Q)");
            }
    }

    std::vector<BasisId> basis;
    std::vector<std::string> names;
    for (int a = 0; a < np; ++a)
        for (int h = 0; h < nh; ++h)
            for (int b = 0; b < np; ++b) {
                basis.push_back(BasisId::smash(a, h, b));
                names.push_back(
                    "(" + p->label_name(p->basis()[static_cast<size_t>(a)]) + "|" +
                    hd.algebra->label_name(hd.algebra->basis()[static_cast<size_t>(h)]) + "|" +
                    p->label_name(p->basis()[static_cast<size_t>(b)]) + ")");
            }
    const int dim = np * nh * np;

    auto triple = [&](const AlgebraElement& a, const AlgebraElement& h,
                      const AlgebraElement& b) {
        return triple_expand(*p, *hd.algebra, *p, BasisId::Kind::SmashTriple, a, h, b);
    };

    std::vector<std::vector<AlgebraElement>> table(
        static_cast<size_t>(dim), std::vector<AlgebraElement>(static_cast<size_t>(dim)));
    for (int i = 0; i < dim; ++i) {
        const BasisId& x = basis[static_cast<size_t>(i)];
        const FreeTensor d2 = hd.iterated_coproduct(elem_h(x.b), 3);
        for (int j = 0; j < dim; ++j) {
            const BasisId& y = basis[static_cast<size_t>(j)];
            // (P1|h1|Q1)(P2|h2|Q2) = P1 h1^(1)(P2) | h1^(2) h2 | h1^(3)(Q2) Q1
            AlgebraElement acc;
            for (const auto& [t, c] : d2.terms) {
                const AlgebraElement pe =
                    p->mul(elem_p(x.a), act(AlgebraElement::term(t[0], f.one()), elem_p(y.a)));
                const AlgebraElement he = hd.algebra->mul(
                    AlgebraElement::term(t[1], f.one()), elem_h(y.b));
                const AlgebraElement qe =
                    p->mul(act(AlgebraElement::term(t[2], f.one()), elem_p(y.c)), elem_p(x.c));
                acc.axpy(c, triple(pe, he, qe));
            }
            table[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(acc);
        }
    }
    AlgebraElement unit = triple(p->unit(), hd.algebra->unit(), p->unit());
    auto total = std::make_shared<FiniteAlgebra>(f, basis, names, unit, table);

    ParaHopfInstance inst;
    inst.name = name;
    inst.kind = "double_crossed";
    inst.field = f;
    inst.total = total;
    inst.base = p;
    inst.hopf = hopf_ptr;
    inst.alpha = [=](const BasisId& pb) {
        return triple_expand(*p, *hopf_ptr->algebra, *p, BasisId::Kind::SmashTriple,
                             AlgebraElement::term(pb, f.one()), hopf_ptr->algebra->unit(),
                             p->unit());
    };
    inst.beta = [=](const BasisId& pb) {
        return triple_expand(*p, *hopf_ptr->algebra, *p, BasisId::Kind::SmashTriple, p->unit(),
                             hopf_ptr->algebra->unit(), AlgebraElement::term(pb, f.one()));
    };
    inst.coproduct = [=](const BasisId& x) {
        // Delta(P|h|Q) = (P|h1|1) (x) (1|h2|Q)
        FreeTensor out;
        out.level = 2;
        const FreeTensor& d = hopf_ptr->coproduct[static_cast<size_t>(x.b)];
        for (const auto& [t, c] : d.terms) {
            AlgebraElement leftleg = triple_expand(
                *p, *hopf_ptr->algebra, *p, BasisId::Kind::SmashTriple,
                AlgebraElement::term(p->basis()[static_cast<size_t>(x.a)], f.one()),
                AlgebraElement::term(t[0], f.one()), p->unit());
            AlgebraElement rightleg = triple_expand(
                *p, *hopf_ptr->algebra, *p, BasisId::Kind::SmashTriple, p->unit(),
                AlgebraElement::term(t[1], f.one()),
                AlgebraElement::term(p->basis()[static_cast<size_t>(x.c)], f.one()));
            out.axpy(c, tensor_expand({leftleg, rightleg}));
        }
        return out;
    };
    inst.counit = [=](const BasisId& x) {
        // eps(P|h|Q) = P eps(h) Q in P
        const Scalar e = hopf_ptr->counit[static_cast<size_t>(x.b)];
        return p->basis_product(p->basis()[static_cast<size_t>(x.a)],
                                p->basis()[static_cast<size_t>(x.c)])
            .scaled(e);
    };
    inst.para_antipode = [=](const BasisId& x) {
        // T(P|h|Q) = S(h3)(Q) | S(h2) | twisted_S(h1)(P)
        AlgebraElement out;
        const AlgebraElement hx =
            AlgebraElement::term(hopf_ptr->algebra->basis()[static_cast<size_t>(x.b)], f.one());
        const FreeTensor d2 = hopf_ptr->iterated_coproduct(hx, 3);
        const AlgebraElement pe0 =
            AlgebraElement::term(p->basis()[static_cast<size_t>(x.a)], f.one());
        const AlgebraElement qe0 =
            AlgebraElement::term(p->basis()[static_cast<size_t>(x.c)], f.one());
        for (const auto& [t, c] : d2.terms) {
            AlgebraElement left =
                act(hopf_ptr->antipode_elem(AlgebraElement::term(t[2], f.one())), qe0);
            AlgebraElement mid = hopf_ptr->antipode_elem(AlgebraElement::term(t[1], f.one()));
            AlgebraElement right =
                act(hopf_ptr->twisted_antipode(AlgebraElement::term(t[0], f.one())), pe0);
            out.axpy(c, triple_expand(*p, *hopf_ptr->algebra, *p, BasisId::Kind::SmashTriple,
                                      left, mid, right));
        }
        return out;
    };
    for (int a = 0; a < np; ++a) inst.generators.push_back(inst.alpha(p->basis()[static_cast<size_t>(a)]));
    for (int b = 0; b < np; ++b) inst.generators.push_back(inst.beta(p->basis()[static_cast<size_t>(b)]));
    for (int h = 0; h < nh; ++h)
        inst.generators.push_back(triple(p->unit(), elem_h(h), p->unit()));
    return inst;
}

// ------------------------------------------------------------- raw tables

ParaHopfInstance build_raw(const RawTables& tables) {
    const Field f = tables.field;
    const int nh = static_cast<int>(tables.h_table.size());
    const int nr = static_cast<int>(tables.r_table.size());
    if (nh == 0) throw Error("build_raw: empty total algebra");
    if (nr == 0) throw Error("build_raw: empty base algebra (dim 0)");
    if (tables.alpha.size() != static_cast<size_t>(nr) ||
        tables.beta.size() != static_cast<size_t>(nr))
        throw Error("build_raw: alpha/beta must list one image per base basis element");
    if (tables.delta.size() != static_cast<size_t>(nh) ||
        tables.eps.size() != static_cast<size_t>(nh) ||
        tables.t.size() != static_cast<size_t>(nh))
        throw Error("build_raw: delta/eps/T must list one image per total basis element");

    std::vector<BasisId> hbasis, rbasis;
    std::vector<std::string> hnames = tables.h_names, rnames = tables.r_names;
    for (int i = 0; i < nh; ++i) hbasis.push_back(BasisId::raw(i));
    for (int i = 0; i < nr; ++i) rbasis.push_back(BasisId::raw(i));
    if (hnames.empty())
        for (int i = 0; i < nh; ++i) hnames.push_back("h" + std::to_string(i));
    if (rnames.empty())
        for (int i = 0; i < nr; ++i) rnames.push_back("r" + std::to_string(i));
    if (hnames.size() != static_cast<size_t>(nh) || rnames.size() != static_cast<size_t>(nr))
        throw Error("build_raw: name list size mismatch");

    auto total = std::make_shared<FiniteAlgebra>(f, hbasis, hnames, tables.h_unit,
                                                 tables.h_table);
    auto base = std::make_shared<FiniteAlgebra>(f, rbasis, rnames, tables.r_unit,
                                                tables.r_table);
    for (const auto& e : tables.alpha) total->require_member(e);
    for (const auto& e : tables.beta) total->require_member(e);
    for (const auto& e : tables.eps) base->require_member(e);
    for (const auto& e : tables.t) total->require_member(e);
    for (const auto& d : tables.delta) {
        if (d.level != 2) throw Error("build_raw: delta entries must be 2-tensors");
        for (const auto& [t, c] : d.terms) {
            (void)c;
            if (!total->contains(t[0]) || !total->contains(t[1]))
                throw Error("build_raw: delta references unknown labels");
        }
    }
    if (!tables.haar.empty()) {
        if (tables.haar.size() != static_cast<size_t>(nh))
            throw Error("build_raw: haar must list one value per total basis element");
        for (const auto& e : tables.haar) base->require_member(e);
    }

    auto alpha = std::make_shared<std::vector<AlgebraElement>>(tables.alpha);
    auto beta = std::make_shared<std::vector<AlgebraElement>>(tables.beta);
    auto delta = std::make_shared<std::vector<FreeTensor>>(tables.delta);
    auto eps = std::make_shared<std::vector<AlgebraElement>>(tables.eps);
    auto tmap = std::make_shared<std::vector<AlgebraElement>>(tables.t);

    ParaHopfInstance inst;
    inst.name = tables.name;
    inst.kind = "raw";
    inst.field = f;
    inst.total = total;
    inst.base = base;
    inst.alpha = [alpha](const BasisId& b) { return alpha->at(static_cast<size_t>(b.a)); };
    inst.beta = [beta](const BasisId& b) { return beta->at(static_cast<size_t>(b.a)); };
    inst.coproduct = [delta](const BasisId& b) { return delta->at(static_cast<size_t>(b.a)); };
    inst.counit = [eps](const BasisId& b) { return eps->at(static_cast<size_t>(b.a)); };
    inst.para_antipode = [tmap](const BasisId& b) { return tmap->at(static_cast<size_t>(b.a)); };
    if (!tables.haar.empty()) {
        auto haar = std::make_shared<std::vector<AlgebraElement>>(tables.haar);
        inst.haar = [haar](const BasisId& b) { return haar->at(static_cast<size_t>(b.a)); };
    }
    if (tables.generators.empty()) {
        for (const auto& b : hbasis)
            inst.generators.push_back(AlgebraElement::term(b, f.one()));
    } else {
        for (const auto& g : tables.generators) {
            total->require_member(g);
            inst.generators.push_back(g);
        }
    }
    return inst;
}

RawTables export_tables(const ParaHopfInstance& inst) {
    if (!inst.finite()) throw Error("export_tables: instance is not finite-dimensional");
    const auto& hb = inst.total->basis();
    const auto& rb = inst.base->basis();
    const int nh = static_cast<int>(hb.size());
    const int nr = static_cast<int>(rb.size());

    std::map<BasisId, int> hidx, ridx;
    for (int i = 0; i < nh; ++i) hidx[hb[static_cast<size_t>(i)]] = i;
    for (int i = 0; i < nr; ++i) ridx[rb[static_cast<size_t>(i)]] = i;

    auto relabel_h = [&](const AlgebraElement& e) {
        AlgebraElement out;
        for (const auto& [b, c] : e.terms()) out.add(BasisId::raw(hidx.at(b)), c);
        return out;
    };
    auto relabel_r = [&](const AlgebraElement& e) {
        AlgebraElement out;
        for (const auto& [b, c] : e.terms()) out.add(BasisId::raw(ridx.at(b)), c);
        return out;
    };

    RawTables t;
    t.name = inst.name + "-export";
    t.field = inst.field;
    for (int i = 0; i < nh; ++i)
        t.h_names.push_back(inst.total->label_name(hb[static_cast<size_t>(i)]));
    for (int i = 0; i < nr; ++i)
        t.r_names.push_back(inst.base->label_name(rb[static_cast<size_t>(i)]));
    t.h_table.assign(static_cast<size_t>(nh),
                     std::vector<AlgebraElement>(static_cast<size_t>(nh)));
    for (int i = 0; i < nh; ++i)
        for (int j = 0; j < nh; ++j)
            t.h_table[static_cast<size_t>(i)][static_cast<size_t>(j)] = relabel_h(
                inst.total->basis_product(hb[static_cast<size_t>(i)], hb[static_cast<size_t>(j)]));
    t.r_table.assign(static_cast<size_t>(nr),
                     std::vector<AlgebraElement>(static_cast<size_t>(nr)));
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nr; ++j)
            t.r_table[static_cast<size_t>(i)][static_cast<size_t>(j)] = relabel_r(
                inst.base->basis_product(rb[static_cast<size_t>(i)], rb[static_cast<size_t>(j)]));
    t.h_unit = relabel_h(inst.total->unit());
    t.r_unit = relabel_r(inst.base->unit());
    for (int i = 0; i < nr; ++i) {
        t.alpha.push_back(relabel_h(inst.alpha(rb[static_cast<size_t>(i)])));
        t.beta.push_back(relabel_h(inst.beta(rb[static_cast<size_t>(i)])));
    }
    for (int i = 0; i < nh; ++i) {
        const FreeTensor d = inst.coproduct(hb[static_cast<size_t>(i)]);
        FreeTensor rd;
        rd.level = 2;
        for (const auto& [tup, c] : d.terms)
            rd.add(Tuple{BasisId::raw(hidx.at(tup[0])), BasisId::raw(hidx.at(tup[1]))}, c);
        t.delta.push_back(std::move(rd));
        t.eps.push_back(relabel_r(inst.counit(hb[static_cast<size_t>(i)])));
        t.t.push_back(relabel_h(inst.para_antipode(hb[static_cast<size_t>(i)])));
    }
    for (const auto& g : inst.generators) t.generators.push_back(relabel_h(g));
    if (inst.has_haar())
        for (int i = 0; i < nh; ++i)
            t.haar.push_back(relabel_r(inst.haar(hb[static_cast<size_t>(i)])));
    return t;
}

// ------------------------------------------------------------- small algebras

std::shared_ptr<const FiniteAlgebra> make_scalar_algebra(const Field& f) {
    std::vector<BasisId> basis{BasisId::raw(0)};
    std::vector<std::string> names{"1"};
    AlgebraElement unit = AlgebraElement::term(BasisId::raw(0), f.one());
    std::vector<std::vector<AlgebraElement>> table{{unit}};
    return std::make_shared<FiniteAlgebra>(f, basis, names, unit, table);
}

std::shared_ptr<const FiniteAlgebra> make_functions_algebra(const Field& f, int npoints) {
    if (npoints < 1) throw Error("make_functions_algebra: need at least one point");
    std::vector<BasisId> basis;
    std::vector<std::string> names;
    AlgebraElement unit;
    for (int i = 0; i < npoints; ++i) {
        basis.push_back(BasisId::raw(i));
        names.push_back("x" + std::to_string(i + 1));
        unit.add(BasisId::raw(i), f.one());
    }
    std::vector<std::vector<AlgebraElement>> table(
        static_cast<size_t>(npoints), std::vector<AlgebraElement>(static_cast<size_t>(npoints)));
    for (int i = 0; i < npoints; ++i)
        table[static_cast<size_t>(i)][static_cast<size_t>(i)] =
            AlgebraElement::term(BasisId::raw(i), f.one());
    return std::make_shared<FiniteAlgebra>(f, basis, names, unit, table);
}

} // namespace pha
