#include "reeslike/gen.hpp"

namespace reeslike {

RingElem gen_ring_elem(Rng& rng, const RingCtx& ring) {
    switch (ring.tag()) {
        case RingTag::RationalField:
            return ring.canon(Int(rng.range(-20, 20)), Int(rng.range(1, 12)));
        case RingTag::Integers:
            return ring.canon(Int(rng.range(-99, 99)));
        case RingTag::PrimeField:
        case RingTag::ModularRing: {
            if (ring.is_zero_ring()) return ring.zero();
            unsigned long cap = 1000000;
            Int m = ring.modulus();
            if (m.fits_ulong_p() && m.get_ui() < cap) cap = m.get_ui();
            return ring.canon(Int(rng.below(cap)));
        }
    }
    fail(Errc::Internal, "unreachable");
}

RingElem gen_ideal_elem(Rng& rng, const IdealFG& ideal) {
    const RingCtx& R = ideal.ring();
    if (ideal.is_unit() && R.is_field()) return gen_ring_elem(rng, R);
    if (ideal.normal_gen().num == 0) return R.zero();
    return R.mul(ideal.normal_gen(), gen_ring_elem(rng, R));
}

Poly gen_poly(Rng& rng, const RingCtx& ring, int maxdeg, char var) {
    int deg = static_cast<int>(rng.below(static_cast<uint64_t>(maxdeg + 1)));
    Poly f;
    f.var = var;
    for (int k = 0; k <= deg; ++k) f.coeffs.push_back(gen_ring_elem(rng, ring));
    return poly_trim(std::move(f));
}

Poly gen_rees_poly(Rng& rng, const ReesCtx& ctx, int maxdeg) {
    int deg = static_cast<int>(rng.below(static_cast<uint64_t>(maxdeg + 1)));
    Poly f;
    f.var = 't';
    for (int k = 0; k <= deg; ++k)
        f.coeffs.push_back(k % 2 == 0 ? gen_ring_elem(rng, ctx.ring)
                                      : gen_ideal_elem(rng, ctx.a));
    return poly_trim(std::move(f));
}

Poly gen_ambient_elem(Rng& rng, const AlgebraRef& amb, int maxdeg) {
    if (amb.is_rees()) return gen_rees_poly(rng, amb.rees_ctx(), maxdeg);
    return gen_poly(rng, amb.ring, maxdeg, amb.var);
}

ElemCert gen_cert(Rng& rng, const AlgebraRef& amb, int n, int len, int maxdeg) {
    ElemCert cert{amb, n, {}};
    cert.ops.reserve(static_cast<size_t>(len));
    for (int k = 0; k < len; ++k) {
        int i = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
        int j = static_cast<int>(rng.below(static_cast<uint64_t>(n - 1)));
        if (j >= i) ++j;
        Poly lam = gen_ambient_elem(rng, amb, maxdeg);
        if (lam.is_zero()) lam = amb.one();
        cert.ops.push_back(ElemOp{i, j, std::move(lam)});
    }
    cert_validate(cert);
    return cert;
}

UmRow gen_um_row(Rng& rng, const AlgebraRef& amb, int n) {
    int len = static_cast<int>(5 + rng.below(26));
    ElemCert cert = gen_cert(rng, amb, n, len, 3);
    std::vector<Poly> entries = unit_row(amb, n);
    std::vector<Poly> dual = unit_row(amb, n);
    for (const auto& op : cert.ops) {
        row_apply(amb, entries, op);
        dual_apply(amb, dual, op);
    }
    return um_row(amb, std::move(entries), std::move(dual));
}

} // namespace reeslike
