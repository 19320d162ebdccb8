#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "reeslike/gen.hpp"
#include "reeslike/ring.hpp"

using namespace reeslike;

namespace {

// brute-force membership oracle: bounded linear combinations over Z,
// exhaustive combinations over Z/n
bool member_oracle(const IdealFG& ideal, const RingElem& x) {
    const RingCtx& R = ideal.ring();
    const auto& gens = ideal.gens();
    if (R.tag() == RingTag::Integers) {
        if (gens.empty()) return x.num == 0;
        std::vector<long> cs(gens.size(), -100);
        while (true) {
            Int acc = 0;
            for (size_t k = 0; k < gens.size(); ++k) acc += Int(cs[k]) * gens[k].num;
            if (acc == x.num) return true;
            size_t k = 0;
            while (k < cs.size() && cs[k] == 100) cs[k++] = -100;
            if (k == cs.size()) return false;
            ++cs[k];
        }
    }
    if (R.tag() == RingTag::ModularRing || R.tag() == RingTag::PrimeField) {
        unsigned long n = R.modulus().get_ui();
        if (gens.empty()) return x.num == 0;
        std::vector<unsigned long> cs(gens.size(), 0);
        while (true) {
            RingElem acc = R.zero();
            for (size_t k = 0; k < gens.size(); ++k)
                acc = R.add(acc, R.mul(R.canon(Int(cs[k])), gens[k]));
            if (acc == x) return true;
            size_t k = 0;
            while (k < cs.size() && cs[k] == n - 1) cs[k++] = 0;
            if (k == cs.size()) return false;
            ++cs[k];
        }
    }
    return false;
}

} // namespace

TEST_CASE("canonicalize") {
    RingCtx z4 = RingCtx::modular(4);
    CHECK(z4.canon(7) == z4.from_int(3));
    RingCtx q = RingCtx::rationals();
    RingElem half = q.canon(6, 4);
    CHECK(half.num == 3);
    CHECK(half.den == 2);
    CHECK(q.canon(-6, -4) == q.canon(3, 2));
    CHECK(q.canon(0, 7) == q.zero());
    RingCtx z = RingCtx::integers();
    CHECK(z.canon(0) == z.zero());
    CHECK_THROWS_AS(q.canon(1, 0), Error);
    CHECK_THROWS_AS(RingCtx::prime_field(6), Error);
}

TEST_CASE("ring axioms hold on random triples") {
    std::vector<RingCtx> rings = {RingCtx::rationals(), RingCtx::integers(),
                                  RingCtx::prime_field(5), RingCtx::modular(12)};
    for (const auto& R : rings) {
        Rng rng(42);
        for (int k = 0; k < 1000; ++k) {
            RingElem a = gen_ring_elem(rng, R);
            RingElem b = gen_ring_elem(rng, R);
            RingElem c = gen_ring_elem(rng, R);
            CHECK(R.add(a, b) == R.add(b, a));
            CHECK(R.mul(a, b) == R.mul(b, a));
            CHECK(R.add(R.add(a, b), c) == R.add(a, R.add(b, c)));
            CHECK(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
            CHECK(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
            CHECK(R.add(a, R.neg(a)) == R.zero());
            CHECK(R.mul(a, R.one()) == a);
        }
    }
}

TEST_CASE("ideal membership agrees with the brute-force oracle") {
    RingCtx z = RingCtx::integers();
    IdealFG i610(z, {z.from_int(6), z.from_int(10)});
    CHECK(i610.normal_gen() == z.from_int(2));
    CHECK(i610.contains(z.from_int(4)));
    CHECK(member_oracle(i610, z.from_int(4)));
    CHECK(!i610.contains(z.from_int(3)));
    CHECK(!member_oracle(i610, z.from_int(3)));
    CHECK(i610.contains(z.zero()));

    Rng rng(7);
    for (int k = 0; k < 200; ++k) {
        IdealFG ideal(z, {z.from_int(rng.range(-12, 12)), z.from_int(rng.range(-12, 12))});
        RingElem x = z.from_int(rng.range(-60, 60));
        CHECK(ideal.contains(x) == member_oracle(ideal, x));
    }
    for (unsigned long n : {4ul, 9ul, 12ul, 30ul, 64ul}) {
        RingCtx zn = RingCtx::modular(Int(n));
        Rng rng2(n);
        for (int k = 0; k < 100; ++k) {
            IdealFG ideal(zn, {gen_ring_elem(rng2, zn), gen_ring_elem(rng2, zn)});
            RingElem x = gen_ring_elem(rng2, zn);
            CHECK(ideal.contains(x) == member_oracle(ideal, x));
        }
    }
}

TEST_CASE("normalization is idempotent") {
    RingCtx z = RingCtx::integers();
    IdealFG ideal(z, {z.from_int(6), z.from_int(10)});
    IdealFG renorm(z, {ideal.normal_gen()});
    CHECK(renorm.normal_gen() == ideal.normal_gen());
}

TEST_CASE("ideal intersection") {
    RingCtx z = RingCtx::integers();
    IdealFG i6 = IdealFG::principal(z, z.from_int(6));
    IdealFG i10 = IdealFG::principal(z, z.from_int(10));
    CHECK(i6.intersect(i10).normal_gen() == z.from_int(30));
    CHECK(IdealFG::zero(z).intersect(i6).is_zero());

    // elementwise check on -100..100
    IdealFG meet = i6.intersect(i10);
    for (long v = -100; v <= 100; ++v) {
        RingElem x = z.from_int(v);
        CHECK(meet.contains(x) == (i6.contains(x) && i10.contains(x)));
    }

    RingCtx z4 = RingCtx::modular(4);
    IdealFG j2 = IdealFG::principal(z4, z4.from_int(2));
    CHECK(j2.intersect(j2).normal_gen() == z4.from_int(2));
    // exhaustive over Z/4
    for (unsigned long v = 0; v < 4; ++v) {
        RingElem x = z4.canon(Int(v));
        CHECK(j2.intersect(j2).contains(x) == j2.contains(x));
    }
}

TEST_CASE("artinian split and CRT round trip") {
    RingCtx z12 = RingCtx::modular(12);
    ArtinianSplit split = artinian_split(z12);
    REQUIRE(split.components.size() == 2);
    CHECK(split.components[0].prime == 2);
    CHECK(split.components[0].ring.modulus() == 4);
    CHECK(split.components[1].prime == 3);
    CHECK(split.components[1].ring.tag() == RingTag::PrimeField);

    auto parts = split.forward(z12.from_int(7));
    CHECK(parts[0] == split.components[0].ring.from_int(3));
    CHECK(parts[1] == split.components[1].ring.from_int(1));
    CHECK(split.combine(parts) == z12.from_int(7));

    // single-component cases
    CHECK(artinian_split(RingCtx::modular(5)).components.size() == 1);
    CHECK(artinian_split(RingCtx::modular(8)).components.size() == 1);

    // round trip is the identity on every residue of every modulus <= 1000
    long bad = 0;
    for (unsigned long n = 2; n <= 1000; ++n) {
        RingCtx zn = RingCtx::modular(Int(n));
        ArtinianSplit s = artinian_split(zn);
        for (unsigned long v = 0; v < n; ++v) {
            RingElem x = zn.canon(Int(v));
            if (!(s.combine(s.forward(x)) == x)) ++bad;
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("nilradical matches the exhaustive nilpotency test") {
    RingCtx z12 = RingCtx::modular(12);
    CHECK(nilradical(z12).normal_gen() == z12.from_int(6));
    CHECK(nilradical(RingCtx::integers()).is_zero());
    CHECK(nilradical(RingCtx::modular(4)).normal_gen() == RingCtx::modular(4).from_int(2));

    for (unsigned long n = 2; n <= 64; ++n) {
        RingCtx zn = RingCtx::modular(Int(n));
        IdealFG nil = nilradical(zn);
        for (unsigned long v = 0; v < n; ++v) {
            RingElem x = zn.canon(Int(v));
            bool nilpotent = false;
            RingElem pow = x;
            for (unsigned long k = 1; k <= n; ++k) {
                if (pow.num == 0) { nilpotent = true; break; }
                pow = zn.mul(pow, x);
            }
            CHECK(nil.contains(x) == nilpotent);
            CHECK(zn.is_nilpotent(x) == nilpotent);
        }
    }
}

TEST_CASE("quotient ring canonicalization") {
    RingCtx z = RingCtx::integers();
    CHECK(z.quotient_by(0) == z);
    CHECK(z.quotient_by(7).tag() == RingTag::PrimeField);
    CHECK(z.quotient_by(12).tag() == RingTag::ModularRing);
    CHECK(z.quotient_by(1).is_zero_ring());
    RingCtx z12 = RingCtx::modular(12);
    CHECK(z12.quotient_by(4).modulus() == 4);
    CHECK(z12.quotient_by(8).modulus() == 4); // gcd(8,12)
    CHECK(z12.quotient_by(5).is_zero_ring());
}

TEST_CASE("units and inverses") {
    RingCtx z12 = RingCtx::modular(12);
    CHECK(z12.is_unit(z12.from_int(5)));
    CHECK(z12.mul(z12.from_int(5), z12.inv_unit(z12.from_int(5))) == z12.one());
    CHECK(!z12.is_unit(z12.from_int(4)));
    CHECK_THROWS_AS(z12.inv_unit(z12.from_int(4)), Error);
    RingCtx z = RingCtx::integers();
    CHECK(z.is_unit(z.from_int(-1)));
    CHECK(!z.is_unit(z.from_int(2)));
}
