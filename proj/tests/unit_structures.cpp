#include "test_helpers.hpp"

#include <doctest.h>

using namespace plrk;
using namespace plrk::testing;

TEST_CASE("coordinate algebra D_n verifies and matches the derivation rule") {
    for (int n = 1; n <= 3; ++n) {
        PreLieRinehartData d = dn_algebra(n);
        CHECK(verify_prelie_rinehart(d).ok());
    }

    PreLieRinehartData d1 = dn_algebra(1);
    RingPtr r = d1.module->ring;
    Poly x = Poly::variable(r, 0);
    Element e = Element::basis(d1.module, 0);

    // (x d).(x d) = x d
    CHECK(extend_product(d1, e.scaled(x), e.scaled(x)) == e.scaled(x));
    // 0.Y = 0
    CHECK(extend_product(d1, Element::zero(d1.module), e.scaled(x)).is_zero());
    // (1 d).(x^2 d) = 2x d
    CHECK(extend_product(d1, e, e.scaled(x * x)) == e.scaled(x.scaled(Rational(2))));
}

TEST_CASE("zero product and anchor verify (abelian)") {
    ModulePtr m = make_module(ring2(), {"e1", "e2"});
    CHECK(verify_prelie_rinehart(PreLieRinehartData::zero(m)).ok());
}

TEST_CASE("rank-1 tables always verify; the associator difference is trilinear") {
    // e.e := x d with anchor d still satisfies both axioms: the associator
    // difference is A-trilinear once the anchor law holds, and at rank 1 the
    // anchor law is an identity. Checked here on elements, not just the basis.
    PreLieRinehartData d1 = dn_algebra(1);
    Element e = Element::basis(d1.module, 0);
    RingPtr r = d1.module->ring;
    Poly x = Poly::variable(r, 0);
    d1.product[0][0] = e.scaled(x);
    CHECK(verify_prelie_rinehart(d1).ok());
    std::mt19937_64 rng(19);
    for (int t = 0; t < 10; ++t) {
        Element X = e.scaled(random_poly(rng, r, 3));
        Element Y = e.scaled(random_poly(rng, r, 3));
        Element Z = e.scaled(random_poly(rng, r, 3));
        CHECK(associator(d1, X, Y, Z) == associator(d1, Y, X, Z));
        CHECK(d1.anchor_of(extend_product(d1, X, Y) - extend_product(d1, Y, X)) ==
              vf_commutator(d1.anchor_of(X), d1.anchor_of(Y)));
    }
}

TEST_CASE("mutated D_2 fails with a machine-readable witness") {
    PreLieRinehartData d2 = dn_algebra(2);
    d2.product[0][1] += Element::basis(d2.module, 0);
    Report rep = verify_prelie_rinehart(d2);
    CHECK_FALSE(rep.ok());
    REQUIRE(rep.first_failure() != nullptr);
    CHECK_FALSE(rep.first_failure()->witness.empty());
}

TEST_CASE("sub adjacent of D_1 is [f d, g d] = (f g' - g f') d") {
    PreLieRinehartData d1 = dn_algebra(1);
    LieRinehartData lie = sub_adjacent(d1);
    CHECK(verify_lie_rinehart(lie).ok());
    RingPtr r = d1.module->ring;
    std::mt19937_64 rng(3);
    Element e = Element::basis(lie.module, 0);
    for (int t = 0; t < 10; ++t) {
        Poly f = random_poly(rng, r, 3), g = random_poly(rng, r, 3);
        Element lhs = extend_bracket(lie, e.scaled(f), e.scaled(g));
        Element rhs = e.scaled(f * g.derivative(0) - g * f.derivative(0));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("commutative product table gives zero bracket") {
    // Q[s]/(s^2-1) as a commutative associative (hence pre-Lie) algebra
    ModulePtr m = make_module(qring(), {"e1", "e2"});
    PreLieRinehartData d = PreLieRinehartData::zero(m);
    d.product[0][0] = Element::basis(m, 0);
    d.product[0][1] = Element::basis(m, 1);
    d.product[1][0] = Element::basis(m, 1);
    d.product[1][1] = Element::basis(m, 0);
    LieRinehartData lie = sub_adjacent(d);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) CHECK(lie.bracket[i][j].is_zero());
}

TEST_CASE("K[t] and Laurent coordinate algebras") {
    RingPtr kt = make_ring({"t"});
    PreLieRinehartData a = coordinate_algebra(kt, {VectorField::partial(kt, 0)});
    CHECK(verify_prelie_rinehart(a).ok());
    // f d . g d = f g' d
    std::mt19937_64 rng(5);
    Element e = Element::basis(a.module, 0);
    for (int t = 0; t < 10; ++t) {
        Poly f = random_poly(rng, kt, 3), g = random_poly(rng, kt, 3);
        CHECK(extend_product(a, e.scaled(f), e.scaled(g)) == e.scaled(f * g.derivative(0)));
    }

    RingPtr lz = make_ring({"z"}, true);
    PreLieRinehartData b = coordinate_algebra(lz, {VectorField::partial(lz, 0)});
    CHECK(verify_prelie_rinehart(b).ok());
    Poly zi = Poly::variable(lz, 0, -1);
    Element ez = Element::basis(b.module, 0);
    // (z^-1 d).(z^-1 d) = z^-1 (-z^-2) d = -z^-3 d
    CHECK(extend_product(b, ez.scaled(zi), ez.scaled(zi)) == ez.scaled(Poly::variable(lz, 0, -3).scaled(Rational(-1))));
}

TEST_CASE("derivation pre-Lie algebra (A,*,theta)") {
    RingPtr r = ring1();
    PreLieRinehartData a = derivation_prelie(r, VectorField::partial(r, 0));
    CHECK(verify_prelie_rinehart(a).ok());
    Poly x = Poly::variable(r, 0);
    Element e = Element::basis(a.module, 0);
    // x * x^2 = x.(d x^2) = 2x^2
    CHECK(extend_product(a, e.scaled(x), e.scaled(x * x)) == e.scaled((x * x).scaled(Rational(2))));

    PreLieRinehartData z = derivation_prelie(r, VectorField::zero(r));
    CHECK(verify_prelie_rinehart(z).ok());
    CHECK(z.product[0][0].is_zero());
    CHECK(z.anchor[0].is_zero());
}

TEST_CASE("pre-Lie action check and transformation algebra") {
    ActionData act = solvable_action(Rational(0));
    CHECK(act.check().ok());
    PreLieRinehartData t = transformation_algebra(act);
    CHECK(verify_prelie_rinehart(t).ok());

    // abelian g with lambda = 0: pre-Lie A-algebra with zero anchor
    ActionData ab;
    ab.flavor = ActionData::Flavor::prelie;
    ab.dim = 1;
    ab.table.assign(1, std::vector<std::vector<Rational>>(1, std::vector<Rational>(1, Rational(0))));
    ab.images.push_back(VectorField::zero(ring1()));
    PreLieRinehartData tz = transformation_algebra(ab);
    CHECK(verify_prelie_rinehart(tz).ok());
    CHECK(tz.anchor[0].is_zero());

    // 1-dim g, e.e = 0, lambda(e) = d1: (1 (x) e).(x1 (x) e) = 1 (x) e
    ActionData one;
    one.flavor = ActionData::Flavor::prelie;
    one.dim = 1;
    one.table.assign(1, std::vector<std::vector<Rational>>(1, std::vector<Rational>(1, Rational(0))));
    one.images.push_back(VectorField::partial(ring1(), 0));
    PreLieRinehartData t1 = transformation_algebra(one);
    Element e = Element::basis(t1.module, 0);
    Poly x = Poly::variable(t1.module->ring, 0);
    CHECK(extend_product(t1, e, e.scaled(x)) == e);
}

TEST_CASE("sub-adjacent of a transformation algebra is the transformation Lie-Rinehart algebra") {
    ActionData act = solvable_action(Rational(1));
    PreLieRinehartData pre = transformation_algebra(act);
    LieRinehartData viaSub = sub_adjacent(pre);

    ActionData lie_act;
    lie_act.flavor = ActionData::Flavor::lie;
    lie_act.dim = act.dim;
    lie_act.images = act.images;
    lie_act.table.assign(act.dim, std::vector<std::vector<Rational>>(act.dim, std::vector<Rational>(act.dim, Rational(0))));
    for (size_t i = 0; i < act.dim; ++i)
        for (size_t j = 0; j < act.dim; ++j)
            for (size_t k = 0; k < act.dim; ++k) lie_act.table[i][j][k] = act.table[i][j][k] - act.table[j][i][k];
    LieRinehartData direct = transformation_lie_algebra(lie_act);
    for (size_t i = 0; i < act.dim; ++i) {
        CHECK(viaSub.anchor[i] == direct.anchor[i]);
        for (size_t j = 0; j < act.dim; ++j) CHECK(viaSub.bracket[i][j].coeffs == direct.bracket[i][j].coeffs);
    }
}

TEST_CASE("tensor product with a field-case factor") {
    ModulePtr m = make_module(qring(), {"e1", "e2"});
    PreLieRinehartData tri = PreLieRinehartData::zero(m);
    tri.product[0][1] = Element::basis(m, 1);
    PreLieRinehartData t = tensor_product_algebra(tri, dn_algebra(1));
    CHECK(verify_prelie_rinehart(t).ok());
    CHECK(t.module->rank() == 3);
    // the first block keeps the triangular product, lifted to Q[x1]
    CHECK(t.product[0][1] == Element::basis(t.module, 1));
}

TEST_CASE("sl2 transformation Lie-Rinehart algebra verifies") {
    // sl(2) is semisimple so it carries no pre-Lie product; the transformation
    // construction for its action lands in the Lie-Rinehart world.
    ActionData act = sl2_standard_action();
    CHECK(act.check().ok());
    LieRinehartData lie = transformation_lie_algebra(act);
    CHECK(verify_lie_rinehart(lie).ok());
}

TEST_CASE("derivation extension A (+) E") {
    RingPtr r = ring1();
    // E rank 1 abelian, D = id, delta = d/dx
    ModulePtr m = make_module(r, {"e"});
    PreLieRinehartData e = PreLieRinehartData::zero(m);
    DerivationPair dp(LinearMap::identity(m), VectorField::partial(r, 0));
    PreLieRinehartData ext = derivation_extension(e, dp);
    CHECK(verify_prelie_rinehart(ext).ok());

    // (a,0)*(b,0) = (a delta(b), 0): x * x^2 |-> x . d(x^2)/dx = 2x^2
    Element one = Element::basis(ext.module, 0);
    Poly x = Poly::variable(r, 0);
    Element lhs = extend_product(ext, one.scaled(x), one.scaled(x * x));
    CHECK(lhs == one.scaled((x * x).scaled(Rational(2))));

    // D = 0, delta = 0: direct sum, products stay inside E
    PreLieRinehartData ext0 = derivation_extension(e, DerivationPair::zero(m));
    CHECK(verify_prelie_rinehart(ext0).ok());
    CHECK(ext0.product[0][1].is_zero());
    CHECK(ext0.anchor[0].is_zero());
}

TEST_CASE("tensor product of two coordinate algebras") {
    PreLieRinehartData dx = dn_algebra(1);
    RingPtr ry = make_ring({"y"});
    PreLieRinehartData dy = coordinate_algebra(ry, {VectorField::partial(ry, 0)});
    PreLieRinehartData t = tensor_product_algebra(dx, dy);
    CHECK(verify_prelie_rinehart(t).ok());
    // mixed basis products vanish
    CHECK(t.product[0][1].is_zero());
    CHECK(t.product[1][0].is_zero());

    // zero algebras tensor to the zero algebra
    PreLieRinehartData z1 = PreLieRinehartData::zero(make_module(make_ring({"u"}), {"a"}));
    PreLieRinehartData z2 = PreLieRinehartData::zero(make_module(make_ring({"v"}), {"b"}));
    PreLieRinehartData tz = tensor_product_algebra(z1, z2);
    CHECK(verify_prelie_rinehart(tz).ok());
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) CHECK(tz.product[i][j].is_zero());

    // variable collision is an error
    CHECK_THROWS_AS(tensor_product_algebra(dx, dn_algebra(1)), error);
}

TEST_CASE("extend_product: A-linear left, Leibniz right") {
    PreLieRinehartData d2 = dn_algebra(2);
    std::mt19937_64 rng(23);
    RingPtr r = d2.module->ring;
    for (int t = 0; t < 15; ++t) {
        Poly a = random_poly(rng, r, 2);
        Element X = random_element(rng, d2.module, 2);
        Element Y = random_element(rng, d2.module, 2);
        CHECK(extend_product(d2, X.scaled(a), Y) == extend_product(d2, X, Y).scaled(a));
        CHECK(extend_product(d2, X, Y.scaled(a)) ==
              extend_product(d2, X, Y).scaled(a) + Y.scaled(d2.anchor_of(X).apply(a)));
    }
}

TEST_CASE("mutation sensitivity: off-diagonal D_2 perturbations fail") {
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
            PreLieRinehartData d2 = dn_algebra(2);
            d2.product[i][j] += Element::basis(d2.module, 0);
            if (i == j) {
                // e_i.e_i := e1 is a legitimate structure (the associator
                // difference never sees equal first slots); confirm on elements
                CHECK(verify_prelie_rinehart(d2).ok());
                std::mt19937_64 rng(29);
                RingPtr r = d2.module->ring;
                for (int t = 0; t < 5; ++t) {
                    Element X = random_element(rng, d2.module, 2);
                    Element Y = random_element(rng, d2.module, 2);
                    Element Z = random_element(rng, d2.module, 2);
                    CHECK(associator(d2, X, Y, Z) == associator(d2, Y, X, Z));
                }
            } else {
                CHECK_FALSE(verify_prelie_rinehart(d2).ok());
            }
        }
}

TEST_CASE("constructor soundness and sub-adjacent functoriality on samples") {
    std::vector<PreLieRinehartData> samples;
    samples.push_back(dn_algebra(1));
    samples.push_back(dn_algebra(2));
    samples.push_back(derivation_prelie(ring1(), VectorField::partial(ring1(), 0)));
    samples.push_back(transformation_algebra(solvable_action(Rational(2))));
    {
        RingPtr r = ring1();
        ModulePtr m = make_module(r, {"e"});
        samples.push_back(derivation_extension(PreLieRinehartData::zero(m),
                                               DerivationPair(LinearMap::identity(m), VectorField::partial(r, 0))));
    }
    for (const auto& s : samples) {
        CHECK(verify_prelie_rinehart(s).ok());
        CHECK(verify_lie_rinehart(sub_adjacent(s)).ok());
    }
}

TEST_CASE("named error paths") {
    RingPtr r = ring2();
    // non-commuting fields are rejected
    Poly x1 = Poly::variable(r, 0);
    VectorField d1 = VectorField::partial(r, 0);
    VectorField xd2(r, {Poly::zero(r), x1});
    CHECK_THROWS_AS(coordinate_algebra(r, {d1, xd2}), error);

    // a derivation-law violation carries a witness in the message
    ModulePtr m = make_module(ring1(), {"e"});
    PreLieRinehartData alg = PreLieRinehartData::zero(m);
    alg.product[0][0] = Element::basis(m, 0); // e.e = e, abelian anchor
    LinearMap half = LinearMap::identity(m).scaled(Poly::constant(ring1(), Rational(1, 2)));
    DerivationPair bad(half, VectorField::zero(ring1()));
    // D(e.e) = e/2 but D(e).e + e.D(e) = e: not a derivation
    CHECK_THROWS_AS(derivation_extension(alg, bad), error);
}

TEST_CASE("homomorphism check helper") {
    PreLieRinehartData d1 = dn_algebra(1);
    LinearMap id = LinearMap::identity(d1.module);
    CHECK(check_homomorphism(d1, d1, id).ok());
    LinearMap half = id.scaled(Poly::constant(d1.module->ring, Rational(1, 2)));
    // scaling by 1/2 breaks the anchor condition
    CHECK_FALSE(check_homomorphism(d1, d1, half).ok());
}
