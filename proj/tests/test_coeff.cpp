#include "unbraid/coeff.hpp"

#include "doctest.h"

#include <random>

using namespace unbraid;

namespace {

// Uniform random small Coeff for property checks.
Coeff random_coeff(const CoeffField& f, std::mt19937& rng, bool with_params = true) {
    std::uniform_int_distribution<int> nterms(1, 3), expd(-3, 3), cd(-4, 4);
    Coeff num = Coeff::zero(f);
    for (int k = 0; k < nterms(rng); ++k) {
        Coeff term = Coeff::from_rat(f, GaussQ(mpq_class(cd(rng)), mpq_class(cd(rng))));
        term *= Coeff::tpow(f, expd(rng));
        if (with_params && f.nvars() > 2) term *= Coeff::var(f, 2, expd(rng));
        num += term;
    }
    return num;
}

Coeff random_nonzero(const CoeffField& f, std::mt19937& rng) {
    for (;;) {
        Coeff c = random_coeff(f, rng);
        if (!c.is_zero()) return c;
    }
}

} // namespace

TEST_CASE("cancellation: (t^2-1)/(t-1) / (t+1) = 1") {
    CoeffField f(2);
    Coeff t = Coeff::tpow(f, 1);
    Coeff one = Coeff::one(f);
    Coeff a = (t * t - one) / (t - one);
    CHECK(a == t + one);
    CHECK((a / (t + one)) == one);
}

TEST_CASE("h*(sqrt q + 1/sqrt q) = q - 1/q = k at L=2") {
    // q = t^2, sqrt q = t
    CoeffField f(2);
    Coeff sq = Coeff::tpow(f, 1);
    Coeff h = sq - sq.inv();
    Coeff k = Coeff::qpow(f, 1) - Coeff::qpow(f, -1);
    CHECK(h * (sq + sq.inv()) == k);
}

TEST_CASE("surd: s*s = [2]_q [4]_q") {
    // fuzzy level N=2 radicand: s^2 = [2][4]
    CoeffField f(4);
    Poly rad = f.p_mul(f.p_qnumber(2), f.p_qnumber(4));
    f.set_surd(rad);
    Coeff s = Coeff::var(f, CoeffField::s_var, 1);
    CHECK(s * s == Coeff::from_poly(f, rad));
    // and (1/s)*s = 1
    CHECK(s.inv() * s == Coeff::one(f));
}

TEST_CASE("q-number identity [2][4] expands correctly at q = t^L") {
    CoeffField f(4);
    Coeff lhs = Coeff::qnum(f, 2) * Coeff::qnum(f, 4);
    // [2] = q^{1/2}+q^{-1/2}, [4] = q^{3/2}+q^{1/2}+q^{-1/2}+q^{-3/2}
    Coeff rhs = (Coeff::qpow(f, 1, 2) + Coeff::qpow(f, -1, 2)) *
                (Coeff::qpow(f, 3, 2) + Coeff::qpow(f, 1, 2) + Coeff::qpow(f, -1, 2) + Coeff::qpow(f, -3, 2));
    CHECK(lhs == rhs);
}

TEST_CASE("field axioms on random triples") {
    CoeffField f(2, {"g1"});
    std::mt19937 rng(42);
    for (int it = 0; it < 60; ++it) {
        Coeff a = random_coeff(f, rng), b = random_coeff(f, rng), c = random_coeff(f, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        Coeff nz = random_nonzero(f, rng);
        CHECK(nz * nz.inv() == Coeff::one(f));
        CHECK(a + (-a) == Coeff::zero(f));
    }
}

TEST_CASE("involution: basic images") {
    CoeffField f(2, {"g1"});
    InvolutionSpec unit_sigma; // |q| = 1 regime
    unit_sigma.invert_t = true;
    unit_sigma.param_images.emplace(f.param_index("g1"), Coeff::var(f, f.param_index("g1")));

    Coeff q = Coeff::qpow(f, 1);
    CHECK(unit_sigma.apply(q) == Coeff::qpow(f, -1));
    Coeff i = Coeff::from_rat(f, GaussQ::i());
    CHECK(unit_sigma.apply(i) == -i);

    // gamma_1 under the A.3 real-q sigma with gamma_1 -> -gbar_{-1} pattern:
    // here just check a nontrivial monomial image round-trips.
    CoeffField f2(2, {"g1", "gb1"});
    int g1 = f2.param_index("g1"), gb1 = f2.param_index("gb1");
    Coeff h = Coeff::tpow(f2, 1) - Coeff::tpow(f2, -1); // L=2: sqrt q = t
    InvolutionSpec real_sigma;
    real_sigma.invert_t = false;
    // gamma_1* = q^{-1} h^{-2} / gbar_1 and gbar_1* = q^{-1} h^{-2} / gamma_1
    Coeff qih2 = Coeff::qpow(f2, -1) * (h * h).inv();
    real_sigma.param_images.emplace(g1, qih2 / Coeff::var(f2, gb1));
    real_sigma.param_images.emplace(gb1, qih2 / Coeff::var(f2, g1));
    Coeff gamma1 = Coeff::var(f2, g1);
    CHECK(real_sigma.apply(real_sigma.apply(gamma1)) == gamma1);

    std::mt19937 rng(7);
    for (int it = 0; it < 25; ++it) {
        Coeff a = random_coeff(f2, rng, false), b = random_coeff(f2, rng, false);
        CHECK(real_sigma.apply(a + b) == real_sigma.apply(a) + real_sigma.apply(b));
        CHECK(real_sigma.apply(a * b) == real_sigma.apply(a) * real_sigma.apply(b));
        CHECK(real_sigma.apply(real_sigma.apply(a)) == a);
    }
}

TEST_CASE("involution: missing parameter image is an error") {
    CoeffField f(2, {"g1"});
    InvolutionSpec sigma;
    sigma.invert_t = true;
    Coeff g = Coeff::var(f, f.param_index("g1"));
    CHECK_THROWS_AS((void)sigma.apply(g), CoeffError);
}

TEST_CASE("eval_numeric: spec examples") {
    SUBCASE("k at t0 = 2, L = 1") {
        CoeffField f(1);
        Coeff k = Coeff::qpow(f, 1) - Coeff::qpow(f, -1);
        EvalPoint pt;
        pt.t0 = 2;
        CHECK(k.eval(pt).a == GaussQ(mpq_class(3, 2)));
    }
    SUBCASE("h at t0 = 2, L = 2") {
        CoeffField f(2);
        Coeff h = Coeff::tpow(f, 1) - Coeff::tpow(f, -1);
        EvalPoint pt;
        pt.t0 = 2;
        CHECK(h.eval(pt).a == GaussQ(mpq_class(3, 2)));
    }
    SUBCASE("pole") {
        CoeffField f(2);
        Coeff c = Coeff::one(f) / (Coeff::tpow(f, 1) - Coeff::one(f));
        EvalPoint pt;
        pt.t0 = 1;
        CHECK_THROWS_AS((void)c.eval(pt), CoeffError);
    }
}

TEST_CASE("is_zero agrees with numeric evaluation at random points") {
    CoeffField f(2, {"g1"});
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> pts(2, 11);
    for (int it = 0; it < 100; ++it) {
        Coeff a = random_coeff(f, rng);
        bool z = a.is_zero();
        int agreed = 0, tried = 0;
        for (int p = 0; p < 5; ++p) {
            EvalPoint pt;
            pt.t0 = mpq_class(pts(rng), pts(rng));
            pt.params.emplace(2, GaussQ(mpq_class(pts(rng))));
            try {
                NumV v = a.eval(pt);
                ++tried;
                if (v.is_zero() == z) ++agreed;
            } catch (const CoeffError&) {
                // pole; skip this point
            }
        }
        if (tried > 0) CHECK(agreed == tried);
    }
}

TEST_CASE("surd arithmetic stays reduced: (s*s - p) = 0") {
    CoeffField f(6);
    Poly rad = f.p_mul(f.p_qnumber(1), f.p_qnumber(3)); // [1][3] = [3]
    f.set_surd(rad);
    Coeff s = Coeff::var(f, CoeffField::s_var, 1);
    CHECK((s * s - Coeff::from_poly(f, rad)).is_zero());
    // mixed: (1 + s)(1 - s) = 1 - p
    Coeff one = Coeff::one(f);
    CHECK((one + s) * (one - s) == one - Coeff::from_poly(f, rad));
    // division rationalizes
    Coeff r = one / (one + s);
    CHECK(r * (one + s) == one);
}

TEST_CASE("monomial square root for the scaling oracle") {
    CoeffField f(2);
    Coeff q2 = Coeff::qpow(f, 2);
    CHECK(q2.monomial_sqrt() == Coeff::qpow(f, 1));
    Coeff bad = Coeff::qpow(f, 1) + Coeff::one(f);
    CHECK_THROWS_AS((void)bad.monomial_sqrt(), CoeffError);
}
