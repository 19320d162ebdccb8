#include "reeslike/rees.hpp"

namespace reeslike {

ReesCtx ReesCtx::make(RingCtx ring, IdealFG a) {
    if (!(a.ring() == ring)) fail(Errc::PreconditionFailed, "ideal over wrong ring");
    ReesCtx ctx{std::move(ring), std::move(a), 0, false, false};
    ctx.dim_A = ctx.ring.dim() + 1;
    ctx.a_is_zero = ctx.a.is_zero();
    ctx.a_is_unit = ctx.a.is_unit();
    return ctx;
}

bool rees_membership(const ReesCtx& ctx, const Poly& f) {
    for (size_t k = 1; k < f.coeffs.size(); k += 2)
        if (!ctx.a.contains(f.coeffs[k])) return false;
    return true;
}

ReesElem rees_element(const ReesCtx& ctx, Poly f) {
    if (f.var != 't') fail(Errc::MalformedElement, "Rees-like elements live in variable t");
    if (!rees_membership(ctx, f))
        fail(Errc::MalformedElement, "odd-degree coefficient outside the ideal a");
    return ReesElem{ctx, poly_trim(std::move(f))};
}

static ReesElem revalidated(const ReesCtx& ctx, Poly f) {
    if (!rees_membership(ctx, f))
        fail(Errc::ClosureViolation, "arithmetic left the graded subring; internal bug");
    return ReesElem{ctx, std::move(f)};
}

ReesElem rees_add(const ReesElem& f, const ReesElem& g) {
    if (!(f.ctx == g.ctx)) fail(Errc::PreconditionFailed, "rees_add: contexts differ");
    return revalidated(f.ctx, poly_add(f.ctx.ring, f.poly, g.poly));
}

ReesElem rees_mul(const ReesElem& f, const ReesElem& g) {
    if (!(f.ctx == g.ctx)) fail(Errc::PreconditionFailed, "rees_mul: contexts differ");
    return revalidated(f.ctx, poly_mul(f.ctx.ring, f.poly, g.poly));
}

ReesQuotientImage quotient_image(const ReesElem& f, const IdealFG& b) {
    if (!(b.ring() == f.ctx.ring)) fail(Errc::PreconditionFailed, "quotient ideal over wrong ring");
    RingHom hom = RingHom::reduce_mod(f.ctx.ring, b);
    ReesCtx qctx = ReesCtx::make(hom.cod(), f.ctx.a.image_in(hom.cod()));
    Poly image = poly_coeff_map(hom, f.poly);
    return ReesQuotientImage{qctx, rees_element(qctx, std::move(image)), hom};
}

bool rees_is_nilpotent(const ReesElem& f) {
    return poly_is_nilpotent(f.ctx.ring, f.poly);
}

bool star_membership(const ReesElem& f, const IdealFG& b) {
    if (!(b.ring() == f.ctx.ring)) fail(Errc::PreconditionFailed, "star ideal over wrong ring");
    for (const auto& c : f.poly.coeffs)
        if (!b.contains(c)) return false;
    return true;
}

std::vector<std::pair<Int, IdealFG>> star_primary_components(const IdealFG& b) {
    if (b.ring().tag() != RingTag::Integers)
        fail(Errc::UnsupportedRing, "primary components are computed over Z");
    const Int& m = b.normal_gen().num;
    if (m < 2) fail(Errc::PreconditionFailed, "expected a proper nonzero ideal (m >= 2)");
    std::vector<std::pair<Int, IdealFG>> out;
    for (const auto& [p, k] : factorize(m)) {
        Int q;
        mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), k);
        out.emplace_back(p, IdealFG::principal(b.ring(), RingElem{q, 1}));
    }
    return out;
}

bool localized_membership(const ReesCtx& ctx, const Poly& f, const RingElem& s, unsigned) {
    const RingCtx& R = ctx.ring;
    if (R.tag() == RingTag::ModularRing)
        fail(Errc::UnsupportedRing, "localization of non-domains is out of scope");
    if (s.num == 0) fail(Errc::PreconditionFailed, "s must be nonzero");
    if (R.is_field()) {
        // s is already a unit; membership reduces to plain membership in A.
        return rees_membership(ctx, f);
    }
    // R = Z, a = (n). An odd coefficient c passes iff n | c * s^m for some m,
    // i.e. iff the s-coprime part of n divides c.
    const Int& n = ctx.a.normal_gen().num;
    if (n == 0) {
        for (size_t k = 1; k < f.coeffs.size(); k += 2)
            if (f.coeffs[k].num != 0) return false;
        return true;
    }
    Int coprime_part = 1;
    for (const auto& [p, k] : factorize(n)) {
        if (s.num % p != 0) {
            Int q;
            mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), k);
            coprime_part *= q;
        }
    }
    for (size_t k = 1; k < f.coeffs.size(); k += 2)
        if (f.coeffs[k].num % coprime_part != 0) return false;
    return true;
}

} // namespace reeslike
