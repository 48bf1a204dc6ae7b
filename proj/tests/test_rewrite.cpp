#include "unbraid/algebras.hpp"

#include "doctest.h"

#include <random>

using namespace unbraid;

TEST_CASE("quantum Euclidean N=3: rule count equals trace of P_a") {
    CoeffField f(6);
    auto sp = quantum_euclidean(f, 3, false);
    CHECK(sp.rw->rule_count() == 3);
}

TEST_CASE("R_q^3: normal forms and confluence") {
    CoeffField f(6);
    auto sp = quantum_euclidean(f, 3, false);
    RewriteSystem& rw = *sp.rw;
    const Element one = Element::unit(f);
    CHECK(rw.nf(one) == one);

    GenId x0 = sp.coord(0), xm = sp.coord(-1), xp = sp.coord(1);
    // ordered word stays put
    Element w00 = Element::word(Coeff::one(f), Word{x0, x0});
    CHECK(rw.nf(w00) == w00);
    // x^-1 x^1 is normal-ordered; x^1 x^-1 reduces with an (x^0)^2 correction
    Element wmp = Element::word(Coeff::one(f), Word{xm, xp});
    CHECK(rw.nf(wmp) == wmp);
    Element wpm = Element::word(Coeff::one(f), Word{xp, xm});
    Element red = rw.nf(wpm);
    CHECK(red.terms.count(Word{xm, xp}) == 1);
    CHECK(red.terms.count(Word{x0, x0}) == 1);
    CHECK(red.terms.size() == 2);
    CHECK(rw.nf(red) == red);
    CHECK(rw.confluence_check().pass);
}

TEST_CASE("R_q^3: perturbed rule set fails confluence with a degree-3 witness") {
    CoeffField f(6);
    auto sp = quantum_euclidean(f, 3, false);
    // rebuild with one coefficient scaled by q
    RewriteSystem rw(f);
    std::vector<GenId> xs;
    for (int p = 0; p < 3; ++p) {
        GenInfo gi;
        gi.name = "y" + std::to_string(p);
        gi.family = Family::Coordinate;
        gi.position = sp.rw->gen(sp.coords[p]).position;
        xs.push_back(rw.add_gen(gi));
    }
    bool perturbed = false;
    for (auto& [lhs0, rhs0] : sp.rw->rules()) {
        (void)lhs0;
        Word lhs{xs[lhs0[0]], xs[lhs0[1]]};
        Element rhs;
        for (auto& [w, c] : rhs0.rhs.terms) {
            Word w2;
            for (GenId g : w) w2.push_back(xs[g]);
            Coeff cc = c;
            if (!perturbed && w.size() == 2) {
                cc = cc * Coeff::qpow(f, 1);
                perturbed = true;
            }
            rhs.add_term(w2, cc);
        }
        rw.add_rule(lhs, rhs);
    }
    REQUIRE(perturbed);
    auto res = rw.confluence_check();
    CHECK_FALSE(res.pass);
    CHECK(res.witness.size() == 3);
}

TEST_CASE("free algebra (no rules) is confluent") {
    CoeffField f(2);
    RewriteSystem rw(f);
    GenInfo a;
    a.name = "a";
    rw.add_gen(a);
    CHECK(rw.confluence_check().pass);
}

TEST_CASE("normal form is idempotent, linear and associative on random elements") {
    CoeffField f(6);
    auto sp = quantum_euclidean(f, 3, false);
    RewriteSystem& rw = *sp.rw;
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> gd(0, 2), len(1, 3), cd(-3, 3);
    auto rand_el = [&]() {
        Element e;
        for (int t = 0; t < 2; ++t) {
            Word w;
            int L = len(rng);
            for (int k = 0; k < L; ++k) w.push_back(sp.coords[gd(rng)]);
            e.add_term(w, Coeff::from_int(f, cd(rng)));
        }
        return e;
    };
    for (int it = 0; it < 20; ++it) {
        Element a = rand_el(), b = rand_el(), c = rand_el();
        Element n = rw.nf(a);
        CHECK(rw.nf(n) == n);
        CHECK(rw.nf(a + b) == rw.nf(rw.nf(a) + rw.nf(b)));
        CHECK(rw.nf_mul(rw.nf_mul(a, b), c) == rw.nf_mul(a, rw.nf_mul(b, c)));
    }
}

TEST_CASE("extension: (x^0)^{-1} and central r with oracle-derived scalars") {
    CoeffField f(6);
    auto sp = quantum_euclidean(f, 3, true);
    RewriteSystem& rw = *sp.rw;
    CHECK(rw.confluence_check().pass);
    GenId r = sp.scale.at("r"), ri = sp.scale.at("r^-1"), w = sp.scale.at("x0^-1");
    GenId x0 = sp.coord(0);
    const Element one = Element::unit(f);
    // inverse pairs
    CHECK(rw.nf_mul(Element::gen(f, r), Element::gen(f, ri)) == one);
    CHECK(rw.nf_mul(Element::gen(f, ri), Element::gen(f, r)) == one);
    CHECK(rw.nf_mul(Element::gen(f, w), Element::gen(f, x0)) == one);
    CHECK(rw.nf_mul(Element::gen(f, x0), Element::gen(f, w)) == one);
    // r^2 equals the metric contraction and is central (validates the rho convention)
    Element r2 = rw.nf_mul(Element::gen(f, r), Element::gen(f, r));
    CHECK(r2 == rw.nf(sp.named("r^2")));
    for (GenId g : sp.coords) {
        Element a = rw.nf_mul(sp.named("r^2"), Element::gen(f, g));
        Element b = rw.nf_mul(Element::gen(f, g), sp.named("r^2"));
        CHECK(a == b);
    }
}

TEST_CASE("sphere quotient: NF(r^2) = 1") {
    CoeffField f(6);
    auto sp = quantum_euclidean(f, 3, true, true);
    CHECK(sp.rw->nf(sp.named("r^2")) == Element::unit(f));
    CHECK(sp.rw->confluence_check().pass);
}

TEST_CASE("R_q^4 with extension: confluent, xkapparel rules hold") {
    CoeffField f(8);
    auto sp = quantum_euclidean(f, 4, true);
    RewriteSystem& rw = *sp.rw;
    CHECK(rw.confluence_check().pass);
    GenId K = sp.scale.at("K1");
    GenId xp = sp.coord(1), xm = sp.coord(-1), x2 = sp.coord(2);
    CHECK(rw.nf_mul(Element::gen(f, K), Element::gen(f, xp)) ==
          Element::word(Coeff::qpow(f, 1), Word{xp, K}));
    CHECK(rw.nf_mul(Element::gen(f, K), Element::gen(f, xm)) ==
          Element::word(Coeff::qpow(f, -1), Word{xm, K}));
    CHECK(rw.nf_mul(Element::gen(f, K), Element::gen(f, x2)) ==
          Element::word(Coeff::one(f), Word{x2, K}));
}

TEST_CASE("linear independence rank oracle") {
    CoeffField f(6);
    auto sp = quantum_euclidean(f, 3, false);
    Element x1 = Element::gen(f, sp.coord(1));
    CHECK(linear_independence(*sp.rw, {x1}, 2));
    Element qx1 = x1.scaled(Coeff::qpow(f, 1));
    CHECK_FALSE(linear_independence(*sp.rw, {x1, qx1}, 1));
    // images of the coordinate multiplet, indexed by the base normal words
    std::vector<Element> all;
    for (GenId g : sp.coords) all.push_back(Element::gen(f, g));
    CHECK(linear_independence(*sp.rw, all, 2, sp.rw.get(), &sp.coords));
}

TEST_CASE("step budget flags a mis-oriented loop") {
    CoeffField f(2);
    RewriteSystem rw(f);
    GenInfo a;
    a.name = "a";
    a.family = Family::Coordinate;
    a.position = 0;
    GenId ga = rw.add_gen(a);
    a.name = "b";
    a.position = 1;
    GenId gb = rw.add_gen(a);
    // a valid rule but a tiny budget
    rw.add_rule(Word{gb, ga}, Element::word(Coeff::one(f), Word{ga, gb}));
    rw.set_step_budget(3);
    Element big = Element::word(Coeff::one(f), Word{gb, gb, gb, ga, ga, ga});
    CHECK_THROWS_AS((void)rw.nf(big), RewriteError);
}

TEST_CASE("Heisenberg sl(2): delta term and extension") {
    CoeffField f(4, {"alpha"});
    auto sp = heisenberg(f, Series::sl, 2, 1);
    RewriteSystem& rw = *sp.rw;
    CHECK(rw.confluence_check().pass);
    // NF(d_1 x^1) has unit term with coefficient 1
    Element e = rw.nf_mul(Element::gen(f, sp.deriv(1)), Element::gen(f, sp.coord(1)));
    auto it = e.terms.find(Word{});
    REQUIRE(it != e.terms.end());
    CHECK(it->second == Coeff::one(f));
    // Lambda^{-2} = 1 + (q^2-1)(x^1 d_1 + x^2 d_2)
    Element lam2 = sp.named("Lambda^-2");
    Element expect = Element::unit(f);
    Coeff q2m1 = Coeff::qpow(f, 2) - Coeff::one(f);
    expect.add_term(Word{sp.coord(1), sp.deriv(1)}, q2m1);
    expect.add_term(Word{sp.coord(2), sp.deriv(2)}, q2m1);
    CHECK(lam2 == expect);
    // inverse pairs and mutually inverse commutation scalars
    GenId Lh = sp.scale.at("Lambda^1/2"), Lhi = sp.scale.at("Lambda^-1/2");
    CHECK(rw.nf_mul(Element::gen(f, Lh), Element::gen(f, Lhi)) == Element::unit(f));
    GenId L = sp.scale.at("Lambda");
    for (int p = 0; p < 2; ++p) {
        Element lx = rw.nf_mul(Element::gen(f, L), Element::gen(f, sp.coords[p]));
        Element ld = rw.nf_mul(Element::gen(f, L), Element::gen(f, sp.derivs[p]));
        REQUIRE(lx.terms.size() == 1);
        REQUIRE(ld.terms.size() == 1);
        CHECK(lx.terms.begin()->second * ld.terms.begin()->second == Coeff::one(f));
    }
}

TEST_CASE("Heisenberg so(3): delta terms, defined elements, extension") {
    CoeffField f(6, {"alpha"});
    auto sp = heisenberg(f, Series::so, 3, 1);
    RewriteSystem& rw = *sp.rw;
    CHECK(rw.confluence_check().pass);
    // NF(d_i x^j) for i != j has no unit term
    Element e = rw.nf_mul(Element::gen(f, sp.deriv(0)), Element::gen(f, sp.coord(1)));
    CHECK(e.terms.count(Word{}) == 0);
    // r^2 is named and central among the coordinates
    for (GenId g : sp.coords)
        CHECK(rw.nf(sp.named("r^2") * Element::gen(f, g)) ==
              rw.nf(Element::gen(f, g) * sp.named("r^2")));
    // Lambda q-commutation against x and d is mutually inverse
    GenId L = sp.scale.at("Lambda");
    for (int p = 0; p < 3; ++p) {
        Element lx = rw.nf_mul(Element::gen(f, L), Element::gen(f, sp.coords[p]));
        Element xd = rw.nf_mul(Element::gen(f, L), Element::gen(f, sp.derivs[p]));
        REQUIRE(lx.terms.size() == 1);
        REQUIRE(xd.terms.size() == 1);
        Coeff cx = lx.terms.begin()->second, cd = xd.terms.begin()->second;
        CHECK(cx * cd == Coeff::one(f));
    }
    // the named corner element A = -alpha Lambda zeta is scaling: A z = lam z A
    auto lam = rw.scaling_profile(sp.named("A_corner"));
    CHECK(lam.size() == rw.gens().size());
}

TEST_CASE("fuzzy sphere level 1 and 2: relations close and are confluent") {
    for (int level : {1, 2}) {
        CoeffField f(6);
        f.set_surd(f.p_mul(f.p_qnumber(level), f.p_qnumber(level + 2)));
        auto sp = fuzzy_sphere(f, level, Coeff::one(f));
        RewriteSystem& rw = *sp.rw;
        CHECK(rw.confluence_check().pass);
        // g^{ij} x_i x_j = R^2
        Element rel;
        for (int i = -1; i <= 1; ++i)
            for (int j = -1; j <= 1; ++j) {
                Coeff g = fuzzy_metric(f, i, j);
                if (g.is_zero()) continue;
                auto& xi = sp.defined.at(i == 1 ? "x1" : i == -1 ? "x-1" : "x0");
                auto& xj = sp.defined.at(j == 1 ? "x1" : j == -1 ? "x-1" : "x0");
                rel += (xi * xj).scaled(g);
            }
        CHECK(rw.nf(rel) == Element::unit(f));
        // weight grading is preserved by every rule
        for (auto& [lhs, rhs] : rw.rules()) {
            int gl = rw.grade(lhs);
            for (auto& [w, c] : rhs.rhs.terms) CHECK(rw.grade(w) == gl);
        }
    }
}

TEST_CASE("fuzzy epsilon spec values") {
    CoeffField f(6);
    CHECK(fuzzy_epsilon(f, 1, 0, 1) == Coeff::qpow(f, 1, 2));
    CHECK(fuzzy_epsilon(f, 0, 0, 0) == Coeff::qpow(f, 1, 2) - Coeff::qpow(f, -1, 2));
    CHECK(fuzzy_epsilon(f, -1, 1, 0) == -Coeff::one(f));
    CHECK(fuzzy_epsilon(f, 1, 1, 0).is_zero());
}
