#include "reeslike/reduce.hpp"

#include <algorithm>
#include <climits>

namespace reeslike {

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

SolverRegistry& SolverRegistry::global() {
    static SolverRegistry reg = [] {
        SolverRegistry r;
        r.add("euclidean",
              [](const AlgebraRef& amb) {
                  return amb.kind == AlgebraRef::Kind::Poly &&
                         (amb.ring.is_field() || amb.ring.is_zero_ring());
              },
              [](const AlgebraRef& amb, const std::vector<Poly>& row) {
                  return reduce_row_euclidean(amb, row);
              });
        r.add("artinian",
              [](const AlgebraRef& amb) { return amb.ring.is_artinian(); },
              [](const AlgebraRef& amb, const std::vector<Poly>& row) {
                  return reduce_row_artinian(amb, row);
              });
        return r;
    }();
    return reg;
}

void SolverRegistry::add(std::string name, std::function<bool(const AlgebraRef&)> matches,
                         RowSolver solve) {
    entries_.push_back(Entry{std::move(name), std::move(matches), std::move(solve)});
}

const SolverRegistry::Entry* SolverRegistry::find(const AlgebraRef& amb) const {
    for (const auto& e : entries_)
        if (e.matches(amb)) return &e;
    return nullptr;
}

std::vector<Poly> row_times_mat(const AlgebraRef& amb, const std::vector<Poly>& v, const Mat& m) {
    if (static_cast<int>(v.size()) != m.n) fail(Errc::PreconditionFailed, "row/matrix size mismatch");
    std::vector<Poly> out(v.size(), amb.zero());
    for (int c = 0; c < m.n; ++c)
        for (int r = 0; r < m.n; ++r)
            out[c] = amb.add(out[c], amb.mul(v[r], m.at(r, c)));
    return out;
}

// ---------------------------------------------------------------------------
// Euclidean engine
// ---------------------------------------------------------------------------

namespace {

// Appends the (u, 0, ..., 0) -> e1 chain: r2 += u^{-1}(1-u) r1; r1 += r2;
// r2 -= (1-u) r1. Needs n >= 2.
void append_unit_normalization(const AlgebraRef& amb, std::vector<Poly>& row, ElemCert& cert,
                               const Poly& u_inv) {
    const RingCtx& R = amb.ring;
    const Poly one = amb.one();
    const Poly u = row[0];
    if (u == one) return;
    Poly one_minus_u = poly_sub(R, one, u);
    auto apply = [&](int i, int j, Poly lam) {
        if (lam.is_zero()) return;
        ElemOp op{i, j, std::move(lam)};
        row_apply(amb, row, op);
        cert.ops.push_back(std::move(op));
    };
    apply(0, 1, poly_mul(R, u_inv, one_minus_u));
    apply(1, 0, one);
    apply(0, 1, poly_neg(R, one_minus_u));
    if (!(row[0] == one)) fail(Errc::Internal, "unit normalization failed");
}

} // namespace

ElemCert reduce_row_euclidean(const AlgebraRef& amb, std::vector<Poly> row) {
    if (amb.kind != AlgebraRef::Kind::Poly)
        fail(Errc::UnsupportedRing, "Euclidean engine expects a polynomial ambient");
    const RingCtx& F = amb.ring;
    if (!F.is_field() && !F.is_zero_ring())
        fail(Errc::UnsupportedRing, "Euclidean engine expects a field");
    const int n = static_cast<int>(row.size());
    if (n < 2) fail(Errc::PreconditionFailed, "row length must be >= 2");
    for (auto& e : row) {
        amb.require_element(e, Errc::MalformedElement);
        e = poly_trim(e);
    }
    ElemCert cert{amb, n, {}};
    if (F.is_zero_ring()) return cert; // everything is already e1 there

    auto apply = [&](int i, int j, Poly lam) {
        if (lam.is_zero()) return;
        ElemOp op{i, j, std::move(lam)};
        row_apply(amb, row, op);
        cert.ops.push_back(std::move(op));
    };

    int prev_pivot_deg = INT_MAX;
    int pivot = -1;
    while (true) {
        pivot = -1;
        int nonzero = 0;
        for (int k = 0; k < n; ++k) {
            if (row[k].is_zero()) continue;
            ++nonzero;
            if (pivot < 0 || row[k].degree() < row[pivot].degree()) pivot = k;
        }
        if (nonzero == 0) fail(Errc::NotUnimodular, "row reduced to zero");
        if (nonzero == 1) {
            if (row[pivot].degree() != 0)
                fail(Errc::NotUnimodular, "gcd of entries is not a unit");
            break;
        }
        if (row[pivot].degree() >= prev_pivot_deg)
            fail(Errc::Internal, "pivot degree failed to decrease");
        prev_pivot_deg = row[pivot].degree();
        for (int k = 0; k < n; ++k) {
            if (k == pivot || row[k].is_zero()) continue;
            PolyDivMod d = poly_divmod(F, row[k], row[pivot]);
            apply(pivot, k, poly_neg(F, d.q));
        }
    }
    if (pivot != 0) {
        apply(pivot, 0, amb.one());
        apply(0, pivot, poly_neg(F, amb.one()));
    }
    auto u_inv = poly_try_inv(F, row[0]);
    if (!u_inv) fail(Errc::NotUnimodular, "remaining entry is not a unit");
    append_unit_normalization(amb, row, cert, *u_inv);
    if (!(row == unit_row(amb, n))) fail(Errc::Internal, "Euclidean engine did not reach e1");
    cert_validate(cert);
    return cert;
}

// ---------------------------------------------------------------------------
// Artinian engine
// ---------------------------------------------------------------------------

namespace {

struct Factor {
    RingCtx ring;        // Z/p^k or the field itself
    RingHom proj;        // S -> S_i
    RingHom sect;        // S_i -> S (canonical lift)
    RingElem idempotent; // in S
};

std::vector<Factor> split_base(const RingCtx& S) {
    std::vector<Factor> out;
    if (S.is_field()) {
        out.push_back(Factor{S, RingHom::identity(S), RingHom::identity(S), S.one()});
        return out;
    }
    ArtinianSplit split = artinian_split(S);
    for (const auto& comp : split.components) {
        out.push_back(Factor{comp.ring, RingHom::reduce_mod(S, IdealFG::principal(S, S.canon(comp.ring.modulus()))),
                             RingHom::lift_section(comp.ring, S), comp.idempotent});
    }
    return out;
}

// Clears (w0, w1, ..., w_{n-1}) with w == e1 mod nil down to e1 exactly,
// recording ops. w[0] must be a unit.
void append_nil_cleanup(const AlgebraRef& amb, std::vector<Poly>& w, ElemCert& cert) {
    const RingCtx& R = amb.ring;
    auto inv0 = poly_try_inv(R, w[0]);
    if (!inv0) fail(Errc::Internal, "cleanup pivot is not a unit");
    for (size_t k = 1; k < w.size(); ++k) {
        if (w[k].is_zero()) continue;
        ElemOp op{0, static_cast<int>(k), poly_neg(R, poly_mul(R, w[k], *inv0))};
        row_apply(amb, w, op);
        cert.ops.push_back(std::move(op));
    }
    append_unit_normalization(amb, w, cert, *inv0);
}

} // namespace

ElemCert reduce_row_artinian(const AlgebraRef& amb, std::vector<Poly> row) {
    const RingCtx& S = amb.ring;
    if (!S.is_artinian()) fail(Errc::UnsupportedRing, "artinian engine expects an artinian base");
    const int n = static_cast<int>(row.size());
    if (n < 2) fail(Errc::PreconditionFailed, "row length must be >= 2");
    for (auto& e : row) {
        amb.require_element(e, Errc::MalformedElement);
        e = poly_trim(e);
    }
    ElemCert cert{amb, n, {}};
    if (S.is_zero_ring()) return cert;

    for (const Factor& fac : split_base(S)) {
        // Restrict to the factor.
        AlgebraRef amb_i = amb;
        amb_i.ring = fac.ring;
        if (amb.is_rees()) amb_i.ideal = amb.ideal->image_in(fac.ring);
        std::vector<Poly> row_i;
        row_i.reserve(row.size());
        for (const auto& e : row) row_i.push_back(poly_coeff_map(fac.proj, e));

        // Reduce modulo the nilradical down to a field ambient.
        IdealFG nil = nilradical(fac.ring);
        RingHom to_field = RingHom::reduce_mod(fac.ring, nil);
        const RingCtx& F = to_field.cod();
        AlgebraRef field_amb = AlgebraRef::poly_ring(F, amb.var);
        bool collapse_to_u = false;
        if (amb.is_rees()) {
            // Over the residue field the ideal is all of F or zero; the
            // Rees-like ambient collapses to F[t] or F[u] accordingly.
            if (amb_i.ideal->is_unit()) {
                field_amb = AlgebraRef::poly_ring(F, 't');
            } else {
                for (const auto& g : amb_i.ideal->gens())
                    if (!fac.ring.is_nilpotent(g))
                        fail(Errc::Internal, "ideal neither unit nor nilpotent in a local factor");
                field_amb = AlgebraRef::poly_ring(F, 'u');
                collapse_to_u = true;
            }
        }
        std::vector<Poly> bar_row;
        bar_row.reserve(row_i.size());
        for (const auto& e : row_i) {
            if (collapse_to_u) {
                Poly g;
                g.var = 'u';
                for (size_t k = 0; k < e.coeffs.size(); k += 2)
                    g.coeffs.push_back(to_field(e.coeffs[k]));
                bar_row.push_back(poly_trim(std::move(g)));
            } else {
                bar_row.push_back(poly_coeff_map(to_field, e, field_amb.var));
            }
        }

        ElemCert bar_cert = reduce_row_euclidean(field_amb, bar_row); // NotUnimodular propagates

        // Lift the certificate back to the factor and clean up the leftover
        // nilpotent discrepancy.
        ElemCert cert_i = lift_E_certificate_mod(bar_cert, amb_i);
        std::vector<Poly> w = row_apply_all(amb_i, row_i, cert_i);
        if (!(w == unit_row(amb_i, n))) append_nil_cleanup(amb_i, w, cert_i);
        if (!(w == unit_row(amb_i, n))) fail(Errc::Internal, "factor reduction did not reach e1");

        // Re-embed scaled by the CRT idempotent: the ops act as cert_i in
        // this factor and as the identity in every other factor.
        for (const auto& op : cert_i.ops) {
            Poly lam = poly_scale(S, fac.idempotent, poly_coeff_map(fac.sect, op.lam));
            if (lam.is_zero()) continue;
            cert.ops.push_back(ElemOp{op.i, op.j, std::move(lam)});
        }
    }

    cert_validate(cert);
    if (!(row_apply_all(amb, row, cert) == unit_row(amb, n)))
        fail(Errc::Internal, "recombined certificate did not reach e1");
    return cert;
}

// ---------------------------------------------------------------------------
// Patch-and-correct pipeline over A
// ---------------------------------------------------------------------------

ReductionReport reduce_row_rees_patched(const ReesCtx& ctx, const std::vector<Poly>& row) {
    const int r = static_cast<int>(row.size());
    if (r < ctx.ring.dim() + 2)
        fail(Errc::BoundViolation, "row length " + std::to_string(r) + " < dim(R) + 2 = " +
                                       std::to_string(ctx.ring.dim() + 2));
    ConductorSquare sq(ctx);
    const AlgebraRef& A = sq.algebra();
    for (const auto& e : row) A.require_element(e, Errc::MalformedElement);

    ReductionReport report;
    auto log = [&](const std::string& stage, bool ok, const std::string& note = "") {
        report.log.push_back(StageLog{stage, ok, note});
    };

    const auto* solver1 = SolverRegistry::global().find(sq.corner_rt());
    if (solver1 == nullptr)
        fail(Errc::NoCornerSolver, "no registered solver for the R[t] corner");

    // Degenerate a = (1): the square collapses and A is literally R[t].
    if (ctx.a_is_unit) {
        ElemCert sigma1 = solver1->solve(sq.corner_rt(), row);
        log("corner1-reduce", true, "solver=" + solver1->name);
        log("degenerate-square", true, "a = (1), A = R[t]");
        ElemCert cert_A{A, r, sigma1.ops};
        cert_validate(cert_A);
        report.final_row = row_apply_all(A, row, cert_A);
        if (!(report.final_row == unit_row(A, r))) fail(Errc::Internal, "degenerate path missed e1");
        report.cert_corner1 = std::move(sigma1);
        report.cert_corner2 = ElemCert{sq.corner_qu(), r, {}};
        report.cert_A = std::move(cert_A);
        report.status = CertLevel::FullyElementary;
        return report;
    }

    const auto* solver2 = SolverRegistry::global().find(sq.corner_qu());
    if (solver2 == nullptr)
        fail(Errc::NoCornerSolver, "no registered solver for the (R/a)[u] corner");

    ElemCert sigma1{sq.corner_rt(), r, {}}, sigma2{sq.corner_qu(), r, {}};
    try {
        // (1) reduce i1(row) over R[t]
        sigma1 = solver1->solve(sq.corner_rt(), row);
        log("corner1-reduce", true, "solver=" + solver1->name);
        // (2) reduce eta1(row) over (R/a)[u]
        std::vector<Poly> row2;
        row2.reserve(row.size());
        for (const auto& e : row) row2.push_back(sq.eta1(e));
        sigma2 = solver2->solve(sq.corner_qu(), row2);
        log("corner2-reduce", true, "solver=" + solver2->name);
    } catch (const Error& e) {
        if (e.code() != Errc::NotUnimodular) throw;
        log("corner-reduce", false, e.what());
        report.status = CertLevel::Failed;
        report.final_row = row;
        return report;
    }

    // (3) phi' = image(sigma1)^{-1} * image(sigma2) over (R/a)[t]; it fixes e1.
    ElemCert s1_image =
        cert_map_entries(sigma1, sq.corner_qt(), [&](const Poly& p) { return sq.eta2(p); });
    ElemCert s2_image =
        cert_map_entries(sigma2, sq.corner_qt(), [&](const Poly& p) { return sq.i2(p); });
    ElemCert phi_cert = cert_concat(cert_inverse(s1_image), s2_image);
    {
        auto e1_after = row_apply_all(sq.corner_qt(), unit_row(sq.corner_qt(), r), phi_cert);
        bool fixes = e1_after == unit_row(sq.corner_qt(), r);
        log("phi-fixes-e1", fixes);
        if (!fixes) fail(Errc::Internal, "phi' does not fix e1");
    }

    // (4) lift phi' along eta2 to psi over R[t]; the discrepancy against e1
    // lives in a*R[t].
    ElemCert psi = lift_E_certificate(phi_cert, sq, LiftAlong::Eta2);
    ElemCert m1_cert = cert_concat(sigma1, psi);
    std::vector<Poly> w = row_apply_all(sq.corner_rt(), row, m1_cert);
    {
        bool in_ideal = true;
        std::vector<Poly> e1 = unit_row(sq.corner_rt(), r);
        for (int k = 0; k < r && in_ideal; ++k) {
            Poly beta = poly_sub(ctx.ring, w[k], e1[k]);
            for (const auto& c : beta.coeffs)
                if (!ctx.a.contains(c)) { in_ideal = false; break; }
        }
        log("eta2-lift", in_ideal, in_ideal ? "discrepancy lies in aR[t]" : "discrepancy escaped aR[t]");
        if (!in_ideal) fail(Errc::Internal, "discrepancy escaped aR[t]");
    }

    // (5) correct the discrepancy when a R[t] is nilpotent or zero, using ops
    // whose product has eta2-image I.
    bool corrected = w == unit_row(sq.corner_rt(), r);
    bool a_nilpotent = true;
    for (const auto& g : ctx.a.gens())
        if (!ctx.ring.is_nilpotent(g)) { a_nilpotent = false; break; }
    if (!corrected && a_nilpotent) {
        const RingCtx& R = ctx.ring;
        const AlgebraRef& rt = sq.corner_rt();
        ElemCert fix{rt, r, {}};
        auto inv0 = poly_try_inv(R, w[0]);
        if (!inv0) fail(Errc::Internal, "discrepancy pivot is not a unit");
        for (int k = 1; k < r; ++k) {
            if (w[k].is_zero()) continue;
            // multiplier lies in aR[t], so its eta2 image is 0
            ElemOp op{0, k, poly_neg(R, poly_mul(R, w[k], *inv0))};
            row_apply(rt, w, op);
            fix.ops.push_back(std::move(op));
        }
        if (!(w[0] == rt.one())) {
            // Whitehead block diag(w0^{-1}, w0, 1, ..): its matrix is
            // congruent to I mod aR[t], so the eta2 image of the product is I.
            Mat block = mat_identity(rt, r);
            block.at(0, 0) = *inv0;
            block.at(1, 1) = w[0];
            ElemCert wh = factor_one_plus_nilpotent(rt, block);
            w = row_apply_all(rt, w, wh);
            fix = cert_concat(std::move(fix), wh);
        }
        if (!(w == unit_row(rt, r))) fail(Errc::Internal, "discrepancy correction missed e1");
        m1_cert = cert_concat(std::move(m1_cert), fix);
        corrected = true;
        log("discrepancy-correction", true);
    } else if (!corrected) {
        log("discrepancy-correction", false, "aR[t] is neither nilpotent nor zero; stopping at CornerCertified");
    } else {
        log("discrepancy-correction", true, "no correction needed");
    }

    // (6)+(7) patch the corner matrices; with exact corner agreement restored,
    // attempt the full E(A) certificate. Without the correction the row does
    // not reach e1 over A, so only the GL pullback is claimed.
    Mat m1 = cert_replay(m1_cert);
    Mat m1_inv = cert_replay(cert_inverse(m1_cert));
    Mat m2 = cert_replay(sigma2);
    Mat m2_inv = cert_replay(cert_inverse(sigma2));
    PatchedMatrix patched =
        corrected ? patch_matrix(m1, m1_inv, m2, m2_inv, sq, PatchMode::E, &m1_cert, &sigma2)
                  : patch_matrix(m1, m1_inv, m2, m2_inv, sq, PatchMode::GL);
    log("patch-matrix", true);
    bool full = corrected && patched.level == CertLevel::FullyElementary && patched.cert_A;
    log("full-certificate", full,
        corrected ? std::string("level=") + cert_level_name(patched.level)
                  : "skipped without discrepancy correction");

    report.cert_corner1 = std::move(sigma1);
    report.cert_corner2 = std::move(sigma2);
    report.final_row = row_times_mat(A, row, patched.m);
    report.patched = std::move(patched.m);
    report.patched_inv = std::move(patched.m_inv);
    if (corrected && !(report.final_row == unit_row(A, r)))
        fail(Errc::Internal, "corrected pipeline missed e1");
    if (full) {
        if (!(row_apply_all(A, row, *patched.cert_A) == unit_row(A, r)))
            fail(Errc::Internal, "full certificate missed e1");
        report.cert_A = std::move(patched.cert_A);
        report.status = CertLevel::FullyElementary;
    } else {
        report.status = CertLevel::CornerCertified;
    }
    return report;
}

// ---------------------------------------------------------------------------
// K1 representative size reduction
// ---------------------------------------------------------------------------

K1Result k1_reduce(const AlgebraRef& amb, const Mat& m, const Mat& m_inv, int target) {
    const int n = m.n;
    const int floor_r = std::max(3, amb.ring.dim() + 2);
    if (target < floor_r)
        fail(Errc::BoundViolation,
             "target " + std::to_string(target) + " < max{3, dim(R)+2} = " + std::to_string(floor_r));
    if (n < target) fail(Errc::BoundViolation, "matrix smaller than the target size");
    if (!mat_is_identity(amb, mat_mul(amb, m, m_inv)))
        fail(Errc::NotAUnit, "supplied inverse fails verification");
    if (n == target) return K1Result{m, m_inv, ElemCert{amb, n, {}}, ElemCert{amb, n, {}}};

    const auto* solver = SolverRegistry::global().find(amb);
    if (solver == nullptr) fail(Errc::NoRowSolver, "no registered row solver for this ambient");

    Mat cur = m;
    Mat cur_inv = m_inv;
    ElemCert sigma1{amb, n, {}};
    std::vector<ElemOp> sigma2_ops;

    auto push_right = [&](const ElemOp& op) {
        mat_apply_right(amb, cur, op);
        ElemOp inv_op{op.i, op.j, poly_neg(amb.ring, op.lam)};
        mat_apply_left(amb, cur_inv, inv_op);
        sigma1.ops.push_back(op);
    };

    for (int size = n; size > target; --size) {
        const int last = size - 1;
        // The last active row is unimodular: its dual is the matching
        // column of the inverse.
        std::vector<Poly> active_row(cur.cells.begin() + static_cast<size_t>(last) * n,
                                     cur.cells.begin() + static_cast<size_t>(last) * n + size);
        bool already_e_last = true;
        for (int c = 0; c < size; ++c)
            if (!(active_row[c] == (c == last ? amb.one() : amb.zero()))) already_e_last = false;
        if (!already_e_last) {
            ElemCert row_cert = solver->solve(amb, active_row);
            for (const auto& op : row_cert.ops) push_right(op);
            // move the 1 from position 0 to the last active position
            push_right(ElemOp{0, last, amb.one()});
            push_right(ElemOp{last, 0, poly_neg(amb.ring, amb.one())});
        }
        for (int c = 0; c < size; ++c)
            if (!(cur.at(last, c) == (c == last ? amb.one() : amb.zero())))
                fail(Errc::Internal, "last row did not reach e_n");
        // sigma2 step: clear the last column with left operations
        std::vector<ElemOp> step;
        for (int i = 0; i < last; ++i) {
            if (cur.at(i, last).is_zero()) continue;
            ElemOp op{i, last, poly_neg(amb.ring, cur.at(i, last))};
            mat_apply_left(amb, cur, op);
            ElemOp inv_op{op.i, op.j, poly_neg(amb.ring, op.lam)};
            mat_apply_right(amb, cur_inv, inv_op);
            step.push_back(std::move(op));
        }
        // later steps multiply on the left of earlier ones
        sigma2_ops.insert(sigma2_ops.begin(), step.begin(), step.end());
    }

    ElemCert sigma2{amb, n, std::move(sigma2_ops)};
    cert_validate(sigma1);
    cert_validate(sigma2);

    // cur must now be diag(M', I_{n-target}).
    for (int rr = 0; rr < n; ++rr)
        for (int cc = 0; cc < n; ++cc) {
            if (rr < target && cc < target) continue;
            const Poly& want = (rr == cc) ? amb.one() : amb.zero();
            if (!(cur.at(rr, cc) == want)) fail(Errc::Internal, "peeling left residue off-block");
        }

    Mat peeled, peeled_inv;
    peeled.n = peeled_inv.n = target;
    for (int rr = 0; rr < target; ++rr)
        for (int cc = 0; cc < target; ++cc) {
            peeled.cells.push_back(cur.at(rr, cc));
            peeled_inv.cells.push_back(cur_inv.at(rr, cc));
        }
    if (!mat_is_identity(amb, mat_mul(amb, peeled, peeled_inv)))
        fail(Errc::Internal, "peeled inverse fails verification");
    return K1Result{std::move(peeled), std::move(peeled_inv), std::move(sigma1), std::move(sigma2)};
}

} // namespace reeslike
