#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "reeslike/gen.hpp"
#include "reeslike/io.hpp"
#include "reeslike/rees.hpp"

using namespace reeslike;

namespace {

ReesCtx make_ctx(RingCtx ring, long a) {
    IdealFG ideal = IdealFG::principal(ring, ring.from_int(a));
    return ReesCtx::make(std::move(ring), std::move(ideal));
}

// saturation oracle: some power of s moves every odd coefficient into a
bool localized_oracle(const ReesCtx& ctx, const Poly& f, const RingElem& s, unsigned max_pow) {
    Poly scaled = f;
    for (unsigned m = 0; m <= max_pow; ++m) {
        if (rees_membership(ctx, scaled)) return true;
        scaled = poly_scale(ctx.ring, s, scaled);
    }
    return false;
}

} // namespace

TEST_CASE("graded membership (odd part in a)") {
    ReesCtx ctx = make_ctx(RingCtx::integers(), 2);
    CHECK(rees_membership(ctx, parse_poly(ctx.ring, "3 + 2*t + 5*t^2 + 4*t^3", 't')));
    CHECK(!rees_membership(ctx, parse_poly(ctx.ring, "t", 't')));
    CHECK(rees_membership(ctx, poly_zero('t')));
    CHECK_THROWS_AS(rees_element(ctx, parse_poly(ctx.ring, "t", 't')), Error);

    // degenerate ideals
    ReesCtx zero_a = make_ctx(RingCtx::integers(), 0);
    CHECK(zero_a.a_is_zero);
    CHECK(rees_membership(zero_a, parse_poly(zero_a.ring, "1 + t^2", 't')));
    CHECK(!rees_membership(zero_a, parse_poly(zero_a.ring, "t^3", 't')));
    ReesCtx unit_a = make_ctx(RingCtx::integers(), 1);
    CHECK(unit_a.a_is_unit);
    CHECK(rees_membership(unit_a, parse_poly(unit_a.ring, "1 + 7*t", 't')));
}

TEST_CASE("dim metadata is dim(R) + 1") {
    CHECK(make_ctx(RingCtx::integers(), 2).dim_A == 2);
    CHECK(make_ctx(RingCtx::modular(12), 6).dim_A == 1);
    CHECK(make_ctx(RingCtx::prime_field(5), 0).dim_A == 1);
    CHECK(make_ctx(RingCtx::rationals(), 1).dim_A == 1);
}

TEST_CASE("arithmetic closure") {
    ReesCtx ctx = make_ctx(RingCtx::integers(), 2);
    ReesElem a = rees_element(ctx, parse_poly(ctx.ring, "2*t", 't'));
    CHECK(rees_mul(a, a).poly == parse_poly(ctx.ring, "4*t^2", 't'));
    ReesElem t2 = rees_element(ctx, parse_poly(ctx.ring, "t^2", 't'));
    CHECK(rees_mul(a, t2).poly == parse_poly(ctx.ring, "2*t^3", 't'));

    RingCtx z4 = RingCtx::modular(4);
    ReesCtx c4 = make_ctx(z4, 2);
    ReesElem x = rees_element(c4, parse_poly(z4, "1 + 2*t", 't'));
    ReesElem y = rees_element(c4, parse_poly(z4, "3 + 2*t", 't'));
    CHECK(rees_add(x, y).poly.is_zero()); // 4 + 4t == 0 mod 4

    for (const ReesCtx& c : {make_ctx(RingCtx::integers(), 2), make_ctx(RingCtx::modular(12), 6),
                             make_ctx(RingCtx::prime_field(5), 0)}) {
        Rng rng(17);
        for (int k = 0; k < 1000; ++k) {
            ReesElem f = rees_element(c, gen_rees_poly(rng, c, 6));
            ReesElem g = rees_element(c, gen_rees_poly(rng, c, 6));
            CHECK_NOTHROW(rees_add(f, g));
            CHECK_NOTHROW(rees_mul(f, g));
        }
    }
}

TEST_CASE("quotient image") {
    ReesCtx ctx = make_ctx(RingCtx::integers(), 2);
    ReesElem f = rees_element(ctx, parse_poly(ctx.ring, "3 + 2*t", 't'));

    auto q4 = quotient_image(f, IdealFG::principal(ctx.ring, ctx.ring.from_int(4)));
    CHECK(q4.ctx.ring.modulus() == 4);
    CHECK(q4.value.poly == parse_poly(q4.ctx.ring, "3 + 2*t", 't'));
    CHECK(q4.ctx.a.normal_gen() == q4.ctx.ring.from_int(2));

    auto q0 = quotient_image(f, IdealFG::zero(ctx.ring));
    CHECK(q0.value.poly == f.poly);
    CHECK(q0.ctx.ring == ctx.ring);

    auto q1 = quotient_image(f, IdealFG::unit(ctx.ring));
    CHECK(q1.ctx.ring.is_zero_ring());
    CHECK(q1.value.poly.is_zero());

    // homomorphism checks, random
    Rng rng(23);
    for (int k = 0; k < 500; ++k) {
        ReesElem a = rees_element(ctx, gen_rees_poly(rng, ctx, 5));
        ReesElem b = rees_element(ctx, gen_rees_poly(rng, ctx, 5));
        long d = rng.range(0, 9);
        IdealFG bd = IdealFG::principal(ctx.ring, ctx.ring.from_int(d));
        auto qa = quotient_image(a, bd);
        auto qb = quotient_image(b, bd);
        CHECK(quotient_image(rees_mul(a, b), bd).value.poly == rees_mul(qa.value, qb.value).poly);
        CHECK(quotient_image(rees_add(a, b), bd).value.poly == rees_add(qa.value, qb.value).poly);
    }
}

TEST_CASE("quotient kernel is coefficientwise membership, exhaustive over Z/n bases") {
    for (long n : {4L, 6L, 8L}) {
        RingCtx zn = RingCtx::modular(n);
        ReesCtx ctx = make_ctx(zn, 2);
        for (long d = 0; d < n; ++d) {
            IdealFG b = IdealFG::principal(zn, zn.from_int(d));
            for (long c0 = 0; c0 < n; ++c0)
                for (long c1 = 0; c1 < n; ++c1) {
                    if (!ctx.a.contains(zn.from_int(c1))) continue;
                    for (long c2 = 0; c2 < n; ++c2) {
                        Poly f;
                        f.var = 't';
                        f.coeffs = {zn.from_int(c0), zn.from_int(c1), zn.from_int(c2)};
                        f = poly_trim(std::move(f));
                        ReesElem e = rees_element(ctx, f);
                        bool in_kernel = quotient_image(e, b).value.poly.is_zero();
                        bool coeffwise = b.contains(zn.from_int(c0)) &&
                                         b.contains(zn.from_int(c1)) &&
                                         b.contains(zn.from_int(c2));
                        CHECK(in_kernel == coeffwise);
                    }
                }
        }
    }
}

TEST_CASE("nilpotence matches direct powering") {
    RingCtx z4 = RingCtx::modular(4);
    ReesCtx ctx = make_ctx(z4, 2);
    ReesElem f = rees_element(ctx, parse_poly(z4, "2 + 2*t", 't'));
    CHECK(rees_is_nilpotent(f));
    CHECK(rees_mul(f, f).poly.is_zero());
    CHECK(!rees_is_nilpotent(rees_element(ctx, parse_poly(z4, "1 + 2*t", 't'))));
    CHECK(rees_is_nilpotent(rees_element(ctx, poly_zero('t'))));

    for (const ReesCtx& c :
         {make_ctx(RingCtx::modular(4), 2), make_ctx(RingCtx::modular(8), 2),
          make_ctx(RingCtx::modular(9), 3), make_ctx(RingCtx::modular(12), 6)}) {
        Rng rng(31);
        unsigned bound = 1;
        for (const auto& [p, k] : factorize(c.ring.modulus())) bound = std::max(bound, k);
        for (int k = 0; k < 1000; ++k) {
            Poly fp = gen_rees_poly(rng, c, 8);
            if (rng.chance(1, 2)) fp = poly_scale(c.ring, nilradical(c.ring).normal_gen(), fp);
            ReesElem e = rees_element(c, fp);
            // direct powering oracle: f^k = 0 for some k <= K iff f^K = 0,
            // since powers of zero stay zero
            unsigned K = bound * static_cast<unsigned>(std::max(0, fp.degree()) + 1);
            bool vanish = poly_pow(c.ring, fp, K).is_zero();
            CHECK(rees_is_nilpotent(e) == vanish);
        }
    }
}

TEST_CASE("star membership and intersection law") {
    ReesCtx ctx = make_ctx(RingCtx::integers(), 2);
    IdealFG b6 = IdealFG::principal(ctx.ring, ctx.ring.from_int(6));
    CHECK(star_membership(rees_element(ctx, parse_poly(ctx.ring, "6 + 6*t + 12*t^2", 't')), b6));
    CHECK(!star_membership(rees_element(ctx, parse_poly(ctx.ring, "2*t", 't')), b6));
    CHECK(star_membership(rees_element(ctx, poly_zero('t')), b6));

    Rng rng(41);
    const RingCtx& Z = ctx.ring;
    for (int k = 0; k < 1000; ++k) {
        long g1 = rng.range(0, 12), g2 = rng.range(0, 12);
        IdealFG b1 = IdealFG::principal(Z, Z.from_int(g1));
        IdealFG b2 = IdealFG::principal(Z, Z.from_int(g2));
        Poly f = gen_rees_poly(rng, ctx, 6);
        switch (rng.below(4)) {
            case 1: f = poly_scale(Z, Z.from_int(g1), f); break;
            case 2: f = poly_scale(Z, Z.from_int(g2), f); break;
            case 3: f = poly_scale(Z, Z.from_int(g1 * g2), f); break;
            default: break;
        }
        ReesElem e = rees_element(ctx, f);
        CHECK(star_membership(e, b1.intersect(b2)) ==
              (star_membership(e, b1) && star_membership(e, b2)));
    }
}

TEST_CASE("star primary components") {
    RingCtx z = RingCtx::integers();
    auto comps12 = star_primary_components(IdealFG::principal(z, z.from_int(12)));
    REQUIRE(comps12.size() == 2);
    CHECK(comps12[0].first == 2);
    CHECK(comps12[0].second.normal_gen() == z.from_int(4));
    CHECK(comps12[1].first == 3);
    CHECK(comps12[1].second.normal_gen() == z.from_int(3));

    auto comps7 = star_primary_components(IdealFG::principal(z, z.from_int(7)));
    REQUIRE(comps7.size() == 1);
    CHECK(comps7[0].second.normal_gen() == z.from_int(7));

    auto comps8 = star_primary_components(IdealFG::principal(z, z.from_int(8)));
    REQUIRE(comps8.size() == 1);
    CHECK(comps8[0].second.normal_gen() == z.from_int(8));

    // membership in b* equals the conjunction over the components
    ReesCtx ctx = make_ctx(z, 2);
    IdealFG b12 = IdealFG::principal(z, z.from_int(12));
    Rng rng(43);
    for (int k = 0; k < 500; ++k) {
        Poly f = gen_rees_poly(rng, ctx, 5);
        if (rng.chance(1, 2)) f = poly_scale(z, z.from_int(rng.chance(1, 2) ? 12 : 4), f);
        ReesElem e = rees_element(ctx, f);
        bool whole = star_membership(e, b12);
        bool all = true;
        for (const auto& [p, comp] : comps12) all = all && star_membership(e, comp);
        CHECK(whole == all);
    }
}

TEST_CASE("star primality witness") {
    ReesCtx ctx = make_ctx(RingCtx::integers(), 2);
    const RingCtx& Z = ctx.ring;
    Rng rng(47);
    long tested = 0;
    for (int k = 0; k < 3000; ++k) {
        long p = std::vector<long>{2, 3, 5}[static_cast<size_t>(k % 3)];
        IdealFG pid = IdealFG::principal(Z, Z.from_int(p));
        Poly fa = gen_rees_poly(rng, ctx, 5);
        Poly fb = gen_rees_poly(rng, ctx, 5);
        uint64_t roll = rng.below(10);
        if (roll < 4) fa = poly_scale(Z, Z.from_int(p), fa);
        else if (roll < 8) fb = poly_scale(Z, Z.from_int(p), fb);
        ReesElem ea = rees_element(ctx, fa);
        ReesElem eb = rees_element(ctx, fb);
        if (star_membership(rees_mul(ea, eb), pid)) {
            ++tested;
            CHECK((star_membership(ea, pid) || star_membership(eb, pid)));
        }
    }
    CHECK(tested >= 1000);
}

TEST_CASE("localized membership by saturation") {
    ReesCtx a4 = make_ctx(RingCtx::integers(), 4);
    RingElem two = a4.ring.from_int(2);
    CHECK(localized_membership(a4, parse_poly(a4.ring, "2*t", 't'), two, 0));

    ReesCtx a3 = make_ctx(RingCtx::integers(), 3);
    CHECK(!localized_membership(a3, parse_poly(a3.ring, "t", 't'), two, 0));

    // anything already in A stays in S^{-1}A
    Rng rng(53);
    for (int k = 0; k < 200; ++k) {
        Poly f = gen_rees_poly(rng, a4, 5);
        CHECK(localized_membership(a4, f, two, 0));
    }

    // random agreement with the bounded saturation oracle
    for (long n : {4L, 6L, 12L, 18L}) {
        ReesCtx ctx = make_ctx(RingCtx::integers(), n);
        Rng rng2(static_cast<uint64_t>(n));
        for (int k = 0; k < 300; ++k) {
            Poly f = gen_poly(rng2, ctx.ring, 5, 't');
            RingElem s = ctx.ring.from_int(rng2.range(1, 12));
            CHECK(localized_membership(ctx, f, s, 0) == localized_oracle(ctx, f, s, 64));
        }
    }

    ReesCtx zn_ctx = make_ctx(RingCtx::modular(4), 2);
    CHECK_THROWS_AS(localized_membership(zn_ctx, poly_zero('t'), zn_ctx.ring.one(), 0), Error);

    // fields: membership is plain membership in A
    ReesCtx f5 = make_ctx(RingCtx::prime_field(5), 0);
    CHECK(localized_membership(f5, parse_poly(f5.ring, "1 + t^2", 't'), f5.ring.from_int(2), 3));
    CHECK(!localized_membership(f5, parse_poly(f5.ring, "t", 't'), f5.ring.from_int(2), 3));
}
