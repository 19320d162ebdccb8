#include "reeslike/patch.hpp"

namespace reeslike {

const char* cert_level_name(CertLevel level) {
    switch (level) {
        case CertLevel::FullyElementary: return "FullyElementary";
        case CertLevel::CornerCertified: return "CornerCertified";
        case CertLevel::Failed: return "Failed";
    }
    return "Unknown";
}

ConductorSquare::ConductorSquare(ReesCtx ctx)
    : ctx_(std::move(ctx)),
      mod_a_(RingHom::reduce_mod(ctx_.ring, ctx_.a)),
      lift_a_(RingHom::lift_section(mod_a_.cod(), ctx_.ring)),
      algebra_(AlgebraRef::rees(ctx_)),
      corner_rt_(AlgebraRef::poly_ring(ctx_.ring, 't')),
      corner_qu_(AlgebraRef::poly_ring(mod_a_.cod(), 'u')),
      corner_qt_(AlgebraRef::poly_ring(mod_a_.cod(), 't')) {}

Poly ConductorSquare::i1(const Poly& f) const {
    algebra_.require_element(f, Errc::MalformedElement);
    return f;
}

Poly ConductorSquare::eta1(const Poly& f) const {
    algebra_.require_element(f, Errc::MalformedElement);
    Poly out;
    out.var = 'u';
    for (size_t k = 0; k < f.coeffs.size(); k += 2) out.coeffs.push_back(mod_a_(f.coeffs[k]));
    return poly_trim(std::move(out));
}

Poly ConductorSquare::i2(const Poly& g) const {
    Poly out;
    out.var = 't';
    if (g.is_zero()) return out;
    out.coeffs.assign(2 * g.coeffs.size() - 1, mod_a_.cod().zero());
    for (size_t k = 0; k < g.coeffs.size(); ++k) out.coeffs[2 * k] = g.coeffs[k];
    return poly_trim(std::move(out));
}

Poly ConductorSquare::eta2(const Poly& f) const { return poly_coeff_map(mod_a_, f, 't'); }

Poly ConductorSquare::lift_eta1(const Poly& g) const {
    Poly out;
    out.var = 't';
    if (g.is_zero()) return out;
    out.coeffs.assign(2 * g.coeffs.size() - 1, ctx_.ring.zero());
    for (size_t k = 0; k < g.coeffs.size(); ++k) out.coeffs[2 * k] = lift_a_(g.coeffs[k]);
    return poly_trim(std::move(out));
}

Poly ConductorSquare::lift_eta2(const Poly& h) const { return poly_coeff_map(lift_a_, h, 't'); }

// ---------------------------------------------------------------------------
// Element, unit and row patching
// ---------------------------------------------------------------------------

static void check_images_match(const Poly& f, const Poly& g, const ConductorSquare& sq,
                               const std::string& where) {
    Poly lhs = sq.eta2(f);
    Poly rhs = sq.i2(g);
    if (lhs == rhs) return;
    const RingCtx& q = sq.corner_qt().ring;
    size_t n = std::max(lhs.coeffs.size(), rhs.coeffs.size());
    for (size_t k = 0; k < n; ++k) {
        if (!(lhs.coeff(k, q.zero()) == rhs.coeff(k, q.zero()))) {
            fail(Errc::ImageMismatch,
                 where + "images differ first at degree " + std::to_string(k));
        }
    }
    fail(Errc::ImageMismatch, where + "images differ");
}

ReesElem patch_element(const Poly& f, const Poly& g, const ConductorSquare& sq) {
    check_images_match(f, g, sq, "");
    // The pullback is f itself; matching images force the parity invariant.
    ReesElem h = rees_element(sq.ctx(), f);
    if (!(sq.eta1(h.poly) == poly_trim(g))) fail(Errc::Internal, "pullback eta1 image mismatch");
    return h;
}

PatchedUnit patch_unit(const Poly& u1, const Poly& u1_inv, const Poly& u2, const Poly& u2_inv,
                       const ConductorSquare& sq) {
    const RingCtx& R = sq.ctx().ring;
    const RingCtx& Q = sq.corner_qu().ring;
    if (!(poly_mul(R, u1, u1_inv) == poly_one(R, 't')) && !R.is_zero_ring())
        fail(Errc::NotAUnit, "u1 * u1_inv != 1 over R[t]");
    if (!(poly_mul(Q, u2, u2_inv) == poly_one(Q, 'u')) && !Q.is_zero_ring())
        fail(Errc::NotAUnit, "u2 * u2_inv != 1 over (R/a)[u]");
    ReesElem c = patch_element(u1, u2, sq);
    ReesElem cinv = patch_element(u1_inv, u2_inv, sq);
    ReesElem prod = rees_mul(c, cinv);
    if (!(prod.poly == poly_one(R, 't')) && !R.is_zero_ring())
        fail(Errc::NotAUnit, "patched product is not 1");
    return PatchedUnit{std::move(c), std::move(cinv)};
}

UmRow patch_row(const UmRow& r1, const UmRow& r2, const ConductorSquare& sq) {
    if (r1.entries.size() != r2.entries.size())
        fail(Errc::PreconditionFailed, "row length mismatch");
    const size_t n = r1.entries.size();
    std::vector<Poly> entries, dual;
    entries.reserve(n);
    dual.reserve(n);
    for (size_t k = 0; k < n; ++k) {
        check_images_match(r1.entries[k], r2.entries[k], sq,
                           "entry " + std::to_string(k + 1) + ": ");
        entries.push_back(patch_element(r1.entries[k], r2.entries[k], sq).poly);
    }
    for (size_t k = 0; k < n; ++k) {
        // Mismatched duals are the caller's inconsistency, not ours to repair.
        if (!(sq.eta2(r1.dual[k]) == sq.i2(r2.dual[k])))
            fail(Errc::DualMismatch,
                 "dual images differ at entry " + std::to_string(k + 1));
        dual.push_back(patch_element(r1.dual[k], r2.dual[k], sq).poly);
    }
    const AlgebraRef& A = sq.algebra();
    if (!(row_dot(A, entries, dual) == A.one()))
        fail(Errc::DualMismatch, "patched dual does not pair to 1");
    return UmRow{A, std::move(entries), std::move(dual)};
}

// ---------------------------------------------------------------------------
// Certificate lifting
// ---------------------------------------------------------------------------

ElemCert lift_E_certificate(const ElemCert& cert, const ConductorSquare& sq, LiftAlong along) {
    cert_validate(cert);
    ElemCert out{along == LiftAlong::Eta1 ? sq.algebra() : sq.corner_rt(), cert.n, {}};
    out.ops.reserve(cert.ops.size());
    for (const auto& op : cert.ops) {
        Poly lam = along == LiftAlong::Eta1 ? sq.lift_eta1(op.lam) : sq.lift_eta2(op.lam);
        out.ops.push_back(ElemOp{op.i, op.j, std::move(lam)});
    }
    cert_validate(out);
    return out;
}

ElemCert lift_E_certificate_mod(const ElemCert& cert, const AlgebraRef& target) {
    cert_validate(cert);
    RingHom section = RingHom::lift_section(cert.ambient.ring, target.ring);
    ElemCert out{target, cert.n, {}};
    out.ops.reserve(cert.ops.size());
    for (const auto& op : cert.ops) {
        Poly lam = poly_coeff_map(section, op.lam, target.var);
        if (cert.ambient.var == 'u' && target.var == 't') {
            // u-coefficients land at even t-degrees
            Poly spread;
            spread.var = 't';
            if (!lam.is_zero()) {
                spread.coeffs.assign(2 * lam.coeffs.size() - 1, target.ring.zero());
                for (size_t k = 0; k < lam.coeffs.size(); ++k)
                    spread.coeffs[2 * k] = lam.coeffs[k];
            }
            lam = poly_trim(std::move(spread));
        }
        out.ops.push_back(ElemOp{op.i, op.j, std::move(lam)});
    }
    cert_validate(out);
    return out;
}

// ---------------------------------------------------------------------------
// factor_one_plus_nilpotent
// ---------------------------------------------------------------------------

ElemCert factor_one_plus_nilpotent(const AlgebraRef& amb, const Mat& d) {
    const RingCtx& R = amb.ring;
    const int n = d.n;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Poly delta = (r == c) ? amb.sub(d.at(r, c), amb.one()) : d.at(r, c);
            if (!poly_is_nilpotent(R, delta))
                fail(Errc::PreconditionFailed, "D - I has a non-nilpotent coefficient");
            amb.require_element(d.at(r, c), Errc::PreconditionFailed);
        }
    if (!(mat_det(amb, d) == amb.one()))
        fail(Errc::PreconditionFailed, "det(D) != 1");

    // Collect ops reducing D to I by right multiplication; the certificate
    // for D itself is the reversed, negated list.
    Mat work = d;
    std::vector<ElemOp> reduction;
    auto push = [&](int i, int j, Poly lam) {
        if (lam.is_zero()) return;
        ElemOp op{i, j, std::move(lam)};
        mat_apply_right(amb, work, op);
        reduction.push_back(std::move(op));
    };

    // Gaussian sweep: clear row k outside the diagonal using the unit pivot
    // (k,k); multipliers stay inside the nilpotent-coefficient ideal, so the
    // matrix remains congruent to I.
    for (int k = 0; k < n; ++k) {
        auto pivot_inv = poly_try_inv(R, work.at(k, k));
        if (!pivot_inv) fail(Errc::Internal, "pivot not a unit during sweep");
        for (int j = 0; j < n; ++j) {
            if (j == k || work.at(k, j).is_zero()) continue;
            push(k, j, poly_neg(R, amb.mul(work.at(k, j), *pivot_inv)));
        }
    }

    // work is now diag(u_1,...,u_n) with product 1. Whitehead: turn each
    // adjacent pair diag(a, b) into diag(1, ab) with four ops.
    for (int k = 0; k + 1 < n; ++k) {
        Poly a = work.at(k, k);
        if (a == amb.one()) continue;
        auto a_inv = poly_try_inv(R, a);
        if (!a_inv) fail(Errc::Internal, "diagonal entry not a unit");
        push(k, k + 1, *a_inv);
        push(k + 1, k, amb.sub(amb.one(), a));
        push(k, k + 1, poly_neg(R, amb.one()));
        push(k + 1, k, amb.sub(amb.one(), *a_inv));
    }
    if (!mat_is_identity(amb, work)) fail(Errc::Internal, "sweep did not reach the identity");

    ElemCert red{amb, n, std::move(reduction)};
    ElemCert cert = cert_inverse(red);
    cert_validate(cert);
    if (!(cert_replay(cert) == d)) fail(Errc::Internal, "factorization replay mismatch");
    return cert;
}

// ---------------------------------------------------------------------------
// Matrix patching
// ---------------------------------------------------------------------------

static Mat map_matrix(const Mat& m, const std::function<Poly(const Poly&)>& f) {
    Mat out;
    out.n = m.n;
    out.cells.reserve(m.cells.size());
    for (const auto& cell : m.cells) out.cells.push_back(f(cell));
    return out;
}

PatchedMatrix patch_matrix(const Mat& m1, const Mat& m1_inv, const Mat& m2, const Mat& m2_inv,
                           const ConductorSquare& sq, PatchMode mode, const ElemCert* cert1,
                           const ElemCert* cert2) {
    if (m1.n != m2.n || m1.n != m1_inv.n || m2.n != m2_inv.n)
        fail(Errc::PreconditionFailed, "matrix size mismatch");
    const int n = m1.n;
    const AlgebraRef& A = sq.algebra();
    const AlgebraRef& rt = sq.corner_rt();
    const AlgebraRef& qu = sq.corner_qu();

    if (!mat_is_identity(rt, mat_mul(rt, m1, m1_inv)))
        fail(Errc::NotAUnit, "M1 inverse fails verification");
    if (!mat_is_identity(qu, mat_mul(qu, m2, m2_inv)))
        fail(Errc::NotAUnit, "M2 inverse fails verification");

    if (mode == PatchMode::SL) {
        if (!(mat_det(rt, m1) == rt.one()))
            fail(Errc::DeterminantMismatch, "det(M1) != 1");
        if (!(mat_det(qu, m2) == qu.one()) && !qu.ring.is_zero_ring())
            fail(Errc::DeterminantMismatch, "det(M2) != 1");
    }
    if (mode == PatchMode::E) {
        if (cert1 == nullptr || cert2 == nullptr)
            fail(Errc::PreconditionFailed, "mode E requires both corner certificates");
        if (!(cert_replay(*cert1) == m1)) fail(Errc::PreconditionFailed, "cert1 does not replay to M1");
        if (!(cert_replay(*cert2) == m2)) fail(Errc::PreconditionFailed, "cert2 does not replay to M2");
    }

    PatchedMatrix out;
    out.m.n = out.m_inv.n = n;
    out.m.cells.reserve(m1.cells.size());
    out.m_inv.cells.reserve(m1.cells.size());
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            std::string where = "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): ";
            check_images_match(m1.at(r, c), m2.at(r, c), sq, where);
            out.m.cells.push_back(patch_element(m1.at(r, c), m2.at(r, c), sq).poly);
            check_images_match(m1_inv.at(r, c), m2_inv.at(r, c), sq, "inverse " + where);
            out.m_inv.cells.push_back(patch_element(m1_inv.at(r, c), m2_inv.at(r, c), sq).poly);
        }

    if (!mat_is_identity(A, mat_mul(A, out.m, out.m_inv)))
        fail(Errc::Internal, "patched inverse fails verification");
    if (mode == PatchMode::SL && !(mat_det(A, out.m) == A.one()))
        fail(Errc::Internal, "patched determinant is not 1");

    if (mode != PatchMode::E) {
        out.level = CertLevel::CornerCertified;
        return out;
    }

    // Try to certify the pullback as elementary over A itself.
    // 1. Degenerate square a = (1): A is literally R[t], cert1 is the answer.
    if (sq.ctx().a_is_unit) {
        ElemCert as_A{A, n, cert1->ops};
        cert_validate(as_A);
        out.level = CertLevel::FullyElementary;
        out.cert_A = std::move(as_A);
        return out;
    }
    // 2. cert1 may already be parity-valid over A with the right eta1 image.
    {
        bool valid = true;
        for (const auto& op : cert1->ops)
            if (!A.valid_element(op.lam)) { valid = false; break; }
        if (valid) {
            ElemCert as_A{A, n, cert1->ops};
            Mat replayed = cert_replay(as_A);
            Mat image = map_matrix(replayed, [&](const Poly& f) { return sq.eta1(f); });
            if (replayed == out.m && image == m2) {
                out.level = CertLevel::FullyElementary;
                out.cert_A = std::move(as_A);
                return out;
            }
        }
    }
    // 3. Lift cert2 along eta1 and factor the discrepancy, which lives in
    //    ker(eta1) = a*; constructive only when a* is zero or nilpotent.
    {
        ElemCert psi = lift_E_certificate(*cert2, sq, LiftAlong::Eta1);
        Mat lifted_inv = cert_replay(cert_inverse(psi));
        Mat discrepancy = mat_mul(A, out.m, lifted_inv);
        if (mat_is_identity(A, discrepancy)) {
            out.level = CertLevel::FullyElementary;
            out.cert_A = std::move(psi);
            return out;
        }
        bool nil_kernel = true;
        for (const auto& g : sq.ctx().a.gens())
            if (!sq.ctx().ring.is_nilpotent(g)) { nil_kernel = false; break; }
        if (nil_kernel) {
            ElemCert head = factor_one_plus_nilpotent(A, discrepancy);
            ElemCert full = cert_concat(std::move(head), psi);
            if (!(cert_replay(full) == out.m)) fail(Errc::Internal, "assembled certificate mismatch");
            out.level = CertLevel::FullyElementary;
            out.cert_A = std::move(full);
            return out;
        }
    }
    out.level = CertLevel::CornerCertified;
    return out;
}

} // namespace reeslike
