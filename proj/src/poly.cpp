#include "reeslike/poly.hpp"

namespace reeslike {

Poly poly_zero(char var) { return Poly{{}, var}; }

Poly poly_trim(Poly f) {
    while (!f.coeffs.empty() && f.coeffs.back().num == 0) f.coeffs.pop_back();
    return f;
}

Poly poly_const(const RingCtx& ring, const RingElem& c, char var) {
    Poly f{{ring.canon(c.num, c.den)}, var};
    return poly_trim(std::move(f));
}

Poly poly_one(const RingCtx& ring, char var) { return poly_const(ring, ring.one(), var); }

Poly poly_monomial(const RingCtx& ring, const RingElem& c, size_t deg, char var) {
    RingElem cc = ring.canon(c.num, c.den);
    if (cc.num == 0) return poly_zero(var);
    Poly f;
    f.var = var;
    f.coeffs.assign(deg + 1, ring.zero());
    f.coeffs[deg] = cc;
    return f;
}

static void require_same_var(const Poly& f, const Poly& g) {
    if (!f.is_zero() && !g.is_zero() && f.var != g.var)
        fail(Errc::PreconditionFailed, "polynomial variables differ");
}

Poly poly_add(const RingCtx& ring, const Poly& f, const Poly& g) {
    require_same_var(f, g);
    Poly out;
    out.var = f.is_zero() ? g.var : f.var;
    size_t n = std::max(f.coeffs.size(), g.coeffs.size());
    out.coeffs.reserve(n);
    RingElem z = ring.zero();
    for (size_t k = 0; k < n; ++k) out.coeffs.push_back(ring.add(f.coeff(k, z), g.coeff(k, z)));
    return poly_trim(std::move(out));
}

Poly poly_neg(const RingCtx& ring, const Poly& f) {
    Poly out = f;
    for (auto& c : out.coeffs) c = ring.neg(c);
    return poly_trim(std::move(out));
}

Poly poly_sub(const RingCtx& ring, const Poly& f, const Poly& g) {
    return poly_add(ring, f, poly_neg(ring, g));
}

Poly poly_mul(const RingCtx& ring, const Poly& f, const Poly& g) {
    require_same_var(f, g);
    if (f.is_zero() || g.is_zero()) return poly_zero(f.is_zero() ? g.var : f.var);
    Poly out;
    out.var = f.var;
    out.coeffs.assign(f.coeffs.size() + g.coeffs.size() - 1, ring.zero());
    for (size_t i = 0; i < f.coeffs.size(); ++i) {
        if (f.coeffs[i].num == 0) continue;
        for (size_t j = 0; j < g.coeffs.size(); ++j)
            out.coeffs[i + j] = ring.add(out.coeffs[i + j], ring.mul(f.coeffs[i], g.coeffs[j]));
    }
    return poly_trim(std::move(out));
}

Poly poly_scale(const RingCtx& ring, const RingElem& c, const Poly& f) {
    Poly out = f;
    for (auto& x : out.coeffs) x = ring.mul(c, x);
    return poly_trim(std::move(out));
}

Poly poly_pow(const RingCtx& ring, const Poly& f, unsigned e) {
    Poly acc = poly_one(ring, f.var);
    Poly base = f;
    while (e > 0) {
        if (e & 1) acc = poly_mul(ring, acc, base);
        e >>= 1;
        if (e) base = poly_mul(ring, base, base);
    }
    return acc;
}

PolyDivMod poly_divmod(const RingCtx& ring, const Poly& f, const Poly& g) {
    if (g.is_zero()) fail(Errc::PreconditionFailed, "division by zero polynomial");
    require_same_var(f, g);
    auto lead_inv = ring.try_inv(g.leading());
    if (!lead_inv) fail(Errc::NonUnitLeadingCoeff, "leading coefficient is not a unit");
    Poly r = poly_trim(f);
    Poly q = poly_zero(g.var);
    q.coeffs.assign(f.coeffs.size(), ring.zero());
    while (!r.is_zero() && r.degree() >= g.degree()) {
        size_t shift = static_cast<size_t>(r.degree() - g.degree());
        RingElem c = ring.mul(r.leading(), *lead_inv);
        q.coeffs[shift] = ring.add(q.coeffs[shift], c);
        r = poly_sub(ring, r, poly_mul(ring, poly_monomial(ring, c, shift, g.var), g));
    }
    q = poly_trim(std::move(q));
    // reconstruction check f = qg + r, kept on permanently
    if (poly_add(ring, poly_mul(ring, q, g), r) != poly_trim(f))
        fail(Errc::Internal, "divmod reconstruction failed");
    return PolyDivMod{std::move(q), std::move(r)};
}

Poly poly_coeff_map(const RingHom& hom, const Poly& f, char out_var) {
    Poly out;
    out.var = out_var;
    out.coeffs.reserve(f.coeffs.size());
    for (const auto& c : f.coeffs) out.coeffs.push_back(hom(c));
    return poly_trim(std::move(out));
}

bool poly_is_nilpotent(const RingCtx& ring, const Poly& f) {
    for (const auto& c : f.coeffs)
        if (!ring.is_nilpotent(c)) return false;
    return true;
}

std::optional<Poly> poly_try_inv(const RingCtx& ring, const Poly& f) {
    if (ring.is_zero_ring()) return poly_zero(f.var);
    if (f.is_zero()) return std::nullopt;
    auto c0 = ring.try_inv(f.coeffs[0]);
    if (!c0) return std::nullopt;
    for (size_t k = 1; k < f.coeffs.size(); ++k)
        if (!ring.is_nilpotent(f.coeffs[k])) return std::nullopt;
    // c0*f = 1 - y with y nilpotent; invert by the finite geometric series.
    Poly y = poly_sub(ring, poly_one(ring, f.var), poly_scale(ring, *c0, f));
    Poly inv = poly_one(ring, f.var);
    Poly pow = y;
    int guard = 0;
    while (!pow.is_zero()) {
        inv = poly_add(ring, inv, pow);
        pow = poly_mul(ring, pow, y);
        if (++guard > 4096) fail(Errc::Internal, "geometric series did not terminate");
    }
    inv = poly_scale(ring, *c0, inv);
    if (poly_mul(ring, inv, f) != poly_one(ring, f.var))
        fail(Errc::Internal, "polynomial inverse verification failed");
    return inv;
}

} // namespace reeslike
