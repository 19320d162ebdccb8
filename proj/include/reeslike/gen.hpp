#pragma once

#include <cstdint>

#include "reeslike/cert.hpp"

namespace reeslike {

/// splitmix64: tiny, seedable, identical on every platform. All randomness
/// in the suites flows through one of these, seeded per job.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool chance(unsigned num, unsigned den) { return below(den) < num; }
};

RingElem gen_ring_elem(Rng& rng, const RingCtx& ring);
RingElem gen_ideal_elem(Rng& rng, const IdealFG& ideal);

Poly gen_poly(Rng& rng, const RingCtx& ring, int maxdeg, char var);
Poly gen_rees_poly(Rng& rng, const ReesCtx& ctx, int maxdeg);
Poly gen_ambient_elem(Rng& rng, const AlgebraRef& amb, int maxdeg);

/// Random elementary certificate with coefficient degree <= maxdeg.
ElemCert gen_cert(Rng& rng, const AlgebraRef& amb, int n, int len, int maxdeg);

/// Random unimodular row: e1 pushed through 5..30 random elementary ops with
/// the dual transported by the inverse ops, so the pairing is exactly 1.
UmRow gen_um_row(Rng& rng, const AlgebraRef& amb, int n);

} // namespace reeslike
