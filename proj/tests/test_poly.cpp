#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "reeslike/gen.hpp"
#include "reeslike/io.hpp"
#include "reeslike/poly.hpp"

using namespace reeslike;

TEST_CASE("schoolbook arithmetic") {
    RingCtx z4 = RingCtx::modular(4);
    Poly f = parse_poly(z4, "1 + 2*t", 't');
    Poly g = parse_poly(z4, "1 + 2*t", 't'); // (1+2t)(1-2t) = 1-4t^2; -2 == 2 mod 4
    CHECK(poly_mul(z4, f, g) == poly_one(z4, 't'));

    RingCtx f5 = RingCtx::prime_field(5);
    Poly a = parse_poly(f5, "2 + t", 't');
    Poly b = parse_poly(f5, "3 + t", 't');
    Poly prod = poly_mul(f5, a, b);
    CHECK(prod == parse_poly(f5, "1 + t^2", 't'));

    RingCtx z = RingCtx::integers();
    Poly h = parse_poly(z, "7 - 3*t + t^4", 't');
    CHECK(poly_add(z, h, poly_zero('t')) == h);
    CHECK(poly_sub(z, h, h).is_zero());
}

TEST_CASE("divmod with multiply-back oracle") {
    RingCtx f5 = RingCtx::prime_field(5);
    Poly f = parse_poly(f5, "1 + t^2", 't');
    Poly g = parse_poly(f5, "2 + t", 't');
    PolyDivMod d = poly_divmod(f5, f, g);
    CHECK(d.q == parse_poly(f5, "3 + t", 't'));
    CHECK(d.r.is_zero());
    CHECK(poly_add(f5, poly_mul(f5, d.q, g), d.r) == f);

    PolyDivMod triv = poly_divmod(f5, f, poly_one(f5, 't'));
    CHECK(triv.q == f);
    CHECK(triv.r.is_zero());

    RingCtx z = RingCtx::integers();
    Poly t2 = parse_poly(z, "t^2", 't');
    Poly twot = parse_poly(z, "2*t", 't');
    CHECK_THROWS_AS(poly_divmod(z, t2, twot), Error);
    try {
        poly_divmod(z, t2, twot);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonUnitLeadingCoeff);
    }
}

TEST_CASE("divmod reconstruction on random instances") {
    RingCtx f7 = RingCtx::prime_field(7);
    Rng rng(11);
    for (int k = 0; k < 1000; ++k) {
        Poly f = gen_poly(rng, f7, 8, 't');
        Poly g = gen_poly(rng, f7, 4, 't');
        if (g.is_zero()) continue;
        PolyDivMod d = poly_divmod(f7, f, g);
        CHECK(poly_add(f7, poly_mul(f7, d.q, g), d.r) == f);
        CHECK(d.r.degree() < g.degree());
    }
}

TEST_CASE("degree is additive when leading coefficients multiply nonzero") {
    RingCtx z = RingCtx::integers();
    Rng rng(3);
    for (int k = 0; k < 1000; ++k) {
        Poly f = gen_poly(rng, z, 6, 't');
        Poly g = gen_poly(rng, z, 6, 't');
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(poly_mul(z, f, g).degree() == f.degree() + g.degree());
    }
}

TEST_CASE("coefficient maps") {
    RingCtx z = RingCtx::integers();
    IdealFG three = IdealFG::principal(z, z.from_int(3));
    RingHom mod3 = RingHom::reduce_mod(z, three);
    Poly f = parse_poly(z, "2 + 3*t + t^2", 't');
    Poly image = poly_coeff_map(mod3, f);
    CHECK(image == parse_poly(mod3.cod(), "2 + t^2", 't'));
    CHECK(poly_coeff_map(mod3, poly_zero('t')).is_zero());

    RingHom lift = RingHom::lift_section(mod3.cod(), z);
    CHECK(poly_coeff_map(lift, image) == parse_poly(z, "2 + t^2", 't'));

    // lift then reduce is the identity on the quotient side
    Rng rng(9);
    for (int k = 0; k < 1000; ++k) {
        Poly g = gen_poly(rng, mod3.cod(), 6, 't');
        CHECK(poly_coeff_map(mod3, poly_coeff_map(lift, g)) == g);
    }
}

TEST_CASE("polynomial units over rings with nilpotents") {
    RingCtx z4 = RingCtx::modular(4);
    Poly u = parse_poly(z4, "1 + 2*t", 't');
    auto inv = poly_try_inv(z4, u);
    REQUIRE(inv.has_value());
    CHECK(poly_mul(z4, u, *inv) == poly_one(z4, 't'));
    CHECK(!poly_try_inv(z4, parse_poly(z4, "t", 't')).has_value());
    CHECK(!poly_try_inv(z4, parse_poly(z4, "1 + t", 't')).has_value());
    CHECK(!poly_try_inv(z4, poly_zero('t')).has_value());

    RingCtx z8 = RingCtx::modular(8);
    Poly v = parse_poly(z8, "3 + 2*t + 4*t^3", 't');
    auto vinv = poly_try_inv(z8, v);
    REQUIRE(vinv.has_value());
    CHECK(poly_mul(z8, v, *vinv) == poly_one(z8, 't'));
}
