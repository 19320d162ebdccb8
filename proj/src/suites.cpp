#include "reeslike/suites.hpp"

#include <algorithm>
#include <sstream>

#include "reeslike/gen.hpp"

namespace reeslike {

SuiteKind suite_from_name(const std::string& name) {
    if (name == "square") return SuiteKind::Square;
    if (name == "prop38") return SuiteKind::Prop38;
    if (name == "prop39") return SuiteKind::Prop39;
    if (name == "patch-row") return SuiteKind::PatchRow;
    if (name == "patch-matrix") return SuiteKind::PatchMatrix;
    if (name == "reduce") return SuiteKind::Reduce;
    if (name == "k1") return SuiteKind::K1;
    fail(Errc::ParseError, "unknown suite '" + name + "'");
}

const char* suite_name(SuiteKind kind) {
    switch (kind) {
        case SuiteKind::Square: return "square";
        case SuiteKind::Prop38: return "prop38";
        case SuiteKind::Prop39: return "prop39";
        case SuiteKind::PatchRow: return "patch-row";
        case SuiteKind::PatchMatrix: return "patch-matrix";
        case SuiteKind::Reduce: return "reduce";
        case SuiteKind::K1: return "k1";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Counterexample shrinking: first drop trailing coefficients, then pull
// coefficient magnitudes toward zero, keeping the sample failing throughout.
// ---------------------------------------------------------------------------

std::vector<Poly> shrink_sample(const RingCtx& ring, std::vector<Poly> sample,
                                const FailPred& still_fails) {
    bool progress = true;
    int guard = 0;
    while (progress && ++guard < 256) {
        progress = false;
        for (size_t p = 0; p < sample.size(); ++p) {
            while (!sample[p].is_zero()) {
                std::vector<Poly> cand = sample;
                cand[p].coeffs.pop_back();
                cand[p] = poly_trim(std::move(cand[p]));
                if (!still_fails(cand)) break;
                sample = std::move(cand);
                progress = true;
            }
        }
        for (size_t p = 0; p < sample.size(); ++p) {
            for (size_t k = 0; k < sample[p].coeffs.size(); ++k) {
                if (sample[p].coeffs[k].num == 0) continue;
                std::vector<Poly> cand = sample;
                cand[p].coeffs[k] = ring.zero();
                cand[p] = poly_trim(std::move(cand[p]));
                if (still_fails(cand)) {
                    sample = std::move(cand);
                    progress = true;
                    continue;
                }
                cand = sample;
                cand[p].coeffs[k] = ring.canon(sample[p].coeffs[k].num / 2, sample[p].coeffs[k].den);
                if (cand[p].coeffs[k] != sample[p].coeffs[k] && still_fails(cand)) {
                    sample = std::move(cand);
                    progress = true;
                }
            }
        }
    }
    return sample;
}

namespace {

struct SuiteBuilder {
    std::ostringstream out;
    bool ok = true;

    void line(const std::string& s) { out << s << "\n"; }

    void check(const std::string& name, long pass, long failed, const std::string& extra = "") {
        out << "check=" << name << " pass=" << pass << " fail=" << failed;
        if (!extra.empty()) out << " " << extra;
        out << "\n";
        if (failed > 0) ok = false;
    }

    void counterexample(const std::string& name, const std::string& text) {
        out << "counterexample check=" << name << " " << text << "\n";
    }

    SuiteResult finish() {
        out << "result=" << (ok ? "ok" : "fail") << "\n";
        return SuiteResult{ok, out.str()};
    }
};

// Records the first failing sample of each named check, minimized.
struct FirstFailure {
    bool have = false;
    std::string text;

    void record(const RingCtx& ring, const std::string& label, std::vector<Poly> sample,
                const FailPred& still_fails) {
        if (have) return;
        have = true;
        std::vector<Poly> small = shrink_sample(ring, std::move(sample), still_fails);
        text = label + "=" + print_row(small);
    }
};

// ---------------------------------------------------------------------------
// square: commutativity, pullback, mismatch rejection
// ---------------------------------------------------------------------------

SuiteResult suite_square(const ReesCtx& ctx, uint64_t seed, long trials) {
    Rng rng(seed);
    ConductorSquare sq(ctx);
    SuiteBuilder rep;
    rep.line("suite=square ctx=" + print_rees_ctx(ctx) + " seed=" + std::to_string(seed) +
             " trials=" + std::to_string(trials));

    long comm_pass = 0, comm_fail = 0;
    long patch_pass = 0, patch_fail = 0;
    long rej_pass = 0, rej_fail = 0;
    FirstFailure comm_ce, patch_ce, rej_ce;

    auto comm_fails = [&](const std::vector<Poly>& s) {
        return rees_membership(ctx, s[0]) && !(sq.eta2(sq.i1(s[0])) == sq.i2(sq.eta1(s[0])));
    };
    auto patch_fails = [&](const std::vector<Poly>& s) {
        if (!rees_membership(ctx, s[0])) return false;
        try {
            return !(patch_element(sq.i1(s[0]), sq.eta1(s[0]), sq).poly == poly_trim(s[0]));
        } catch (const Error&) {
            return true;
        }
    };

    for (long k = 0; k < trials; ++k) {
        Poly f = gen_rees_poly(rng, ctx, 6);
        if (sq.eta2(sq.i1(f)) == sq.i2(sq.eta1(f))) {
            ++comm_pass;
        } else {
            ++comm_fail;
            comm_ce.record(ctx.ring, "f", {f}, comm_fails);
        }
        bool patched_ok = !patch_fails({f});
        if (patched_ok) {
            ++patch_pass;
        } else {
            ++patch_fail;
            patch_ce.record(ctx.ring, "f", {f}, patch_fails);
        }
        if (ctx.a_is_unit) {
            ++rej_pass; // no mismatched pair exists over the zero corner
        } else {
            // perturb one even coefficient by 1, which is never in a here
            size_t deg = 2 * rng.below(4);
            Poly perturbed = poly_add(ctx.ring, f, poly_monomial(ctx.ring, ctx.ring.one(), deg, 't'));
            bool rejected = false;
            try {
                patch_element(perturbed, sq.eta1(f), sq);
            } catch (const Error& e) {
                rejected = e.code() == Errc::ImageMismatch;
            }
            if (rejected) {
                ++rej_pass;
            } else {
                ++rej_fail;
                if (!rej_ce.have) {
                    rej_ce.have = true;
                    rej_ce.text = "f=" + print_poly(f) + " perturbed_degree=" + std::to_string(deg);
                }
            }
        }
    }
    rep.check("commutativity", comm_pass, comm_fail);
    if (comm_ce.have) rep.counterexample("commutativity", comm_ce.text);
    rep.check("pullback-matched", patch_pass, patch_fail);
    if (patch_ce.have) rep.counterexample("pullback-matched", patch_ce.text);
    rep.check("pullback-mismatch-rejected", rej_pass, rej_fail,
              ctx.a_is_unit ? "note=vacuous-for-unit-ideal" : "");
    if (rej_ce.have) rep.counterexample("pullback-mismatch-rejected", rej_ce.text);
    return rep.finish();
}

// ---------------------------------------------------------------------------
// prop38: nilpotence vs direct powering, quotient multiplicativity, kernel
// ---------------------------------------------------------------------------

unsigned nil_power_bound(const RingCtx& ring) {
    if (ring.tag() != RingTag::ModularRing || ring.is_zero_ring()) return 1;
    unsigned e = 1;
    for (const auto& [p, k] : factorize(ring.modulus())) e = std::max(e, k);
    return e;
}

bool nilpotent_by_powering(const ReesCtx& ctx, const Poly& f, unsigned bound) {
    Poly pow = poly_trim(f);
    for (unsigned k = 1; k <= bound; ++k) {
        if (pow.is_zero()) return true;
        pow = poly_mul(ctx.ring, pow, f);
    }
    return pow.is_zero();
}

SuiteResult suite_prop38(const ReesCtx& ctx, uint64_t seed, long trials) {
    Rng rng(seed);
    SuiteBuilder rep;
    rep.line("suite=prop38 ctx=" + print_rees_ctx(ctx) + " seed=" + std::to_string(seed) +
             " trials=" + std::to_string(trials));

    const unsigned bound = nil_power_bound(ctx.ring);
    long nil_pass = 0, nil_fail = 0;
    long mul_pass = 0, mul_fail = 0;
    long ker_pass = 0, ker_fail = 0;
    FirstFailure nil_ce, mul_ce, ker_ce;

    auto nil_fails = [&](const std::vector<Poly>& s) {
        if (!rees_membership(ctx, s[0])) return false;
        ReesElem e = rees_element(ctx, s[0]);
        return rees_is_nilpotent(e) != nilpotent_by_powering(ctx, s[0], bound);
    };

    for (long k = 0; k < trials; ++k) {
        Poly fp = gen_rees_poly(rng, ctx, 8);
        // bias toward the nilradical half the time so both answers occur
        if (rng.chance(1, 2)) {
            RingElem nilgen = nilradical(ctx.ring).normal_gen();
            if (nilgen.num != 0) fp = poly_scale(ctx.ring, nilgen, fp);
        }
        if (!nil_fails({fp})) {
            ++nil_pass;
        } else {
            ++nil_fail;
            nil_ce.record(ctx.ring, "f", {fp}, nil_fails);
        }

        Poly gp = gen_rees_poly(rng, ctx, 8);
        Int d;
        if (ctx.ring.tag() == RingTag::ModularRing || ctx.ring.tag() == RingTag::PrimeField) {
            unsigned long cap = 1000;
            if (ctx.ring.modulus().fits_ulong_p())
                cap = std::min(cap, ctx.ring.modulus().get_ui());
            d = Int(rng.below(cap + 1));
        } else {
            d = Int(rng.range(0, 12));
        }
        IdealFG b = IdealFG::principal(ctx.ring, ctx.ring.canon(d));
        ReesElem fe = rees_element(ctx, fp);
        ReesElem ge = rees_element(ctx, gp);
        auto qf = quotient_image(fe, b);
        auto qg = quotient_image(ge, b);
        auto qfg = quotient_image(rees_mul(fe, ge), b);
        bool mult_ok = rees_mul(qf.value, qg.value).poly == qfg.value.poly;
        if (mult_ok) {
            ++mul_pass;
        } else {
            ++mul_fail;
            if (!mul_ce.have) {
                mul_ce.have = true;
                mul_ce.text = "f=" + print_poly(fp) + " g=" + print_poly(gp) +
                              " b=" + print_ideal(b);
            }
        }
        bool in_kernel = qf.value.poly.is_zero();
        bool coeffwise = true;
        for (const auto& c : fp.coeffs)
            if (!b.contains(c)) { coeffwise = false; break; }
        if (in_kernel == coeffwise) {
            ++ker_pass;
        } else {
            ++ker_fail;
            if (!ker_ce.have) {
                ker_ce.have = true;
                ker_ce.text = "f=" + print_poly(fp) + " b=" + print_ideal(b);
            }
        }
    }
    rep.check("nilpotence-vs-powering", nil_pass, nil_fail);
    if (nil_ce.have) rep.counterexample("nilpotence-vs-powering", nil_ce.text);
    rep.check("quotient-multiplicative", mul_pass, mul_fail);
    if (mul_ce.have) rep.counterexample("quotient-multiplicative", mul_ce.text);
    rep.check("quotient-kernel", ker_pass, ker_fail);
    if (ker_ce.have) rep.counterexample("quotient-kernel", ker_ce.text);
    return rep.finish();
}

// ---------------------------------------------------------------------------
// prop39: star-ideal intersection law and primality witness over R = Z
// ---------------------------------------------------------------------------

struct Triple {
    long a, b1, b2;
};

constexpr Triple kTriples[20] = {
    {2, 2, 3},  {2, 4, 6},   {2, 6, 10}, {2, 0, 5},  {3, 2, 3},
    {3, 9, 6},  {4, 8, 12},  {6, 6, 4},  {0, 2, 3},  {0, 4, 10},
    {1, 2, 3},  {1, 6, 15},  {2, 12, 18}, {5, 5, 7}, {6, 2, 9},
    {12, 8, 18}, {2, 2, 2},  {3, 4, 0},  {4, 1, 6},  {30, 6, 45},
};

SuiteResult suite_prop39(const ReesCtx& ctx, uint64_t seed, long trials) {
    if (ctx.ring.tag() != RingTag::Integers)
        fail(Errc::UnsupportedRing, "prop39 runs over R = Z");
    Rng rng(seed);
    SuiteBuilder rep;
    rep.line("suite=prop39 ctx=" + print_rees_ctx(ctx) + " seed=" + std::to_string(seed) +
             " trials=" + std::to_string(trials) + " triples=20");

    const RingCtx Z = ctx.ring;
    long int_pass = 0, int_fail = 0;
    long prim_pass = 0, prim_fail = 0, prim_tested = 0;
    FirstFailure int_ce, prim_ce;

    for (long k = 0; k < trials; ++k) {
        const Triple& tr = kTriples[static_cast<size_t>(k % 20)];
        ReesCtx actx = ReesCtx::make(Z, IdealFG::principal(Z, Z.from_int(tr.a)));
        IdealFG b1 = IdealFG::principal(Z, Z.from_int(tr.b1));
        IdealFG b2 = IdealFG::principal(Z, Z.from_int(tr.b2));
        Poly f = gen_rees_poly(rng, actx, 6);
        // bias into the ideals so both membership answers occur
        switch (rng.below(4)) {
            case 1: f = poly_scale(Z, Z.from_int(tr.b1), f); break;
            case 2: f = poly_scale(Z, Z.from_int(tr.b2), f); break;
            case 3: f = poly_scale(Z, Z.from_int(tr.b1 * tr.b2), f); break;
            default: break;
        }
        ReesElem fe = rees_element(actx, f);
        bool lhs = star_membership(fe, b1.intersect(b2));
        bool rhs = star_membership(fe, b1) && star_membership(fe, b2);
        if (lhs == rhs) {
            ++int_pass;
        } else {
            ++int_fail;
            if (!int_ce.have) {
                int_ce.have = true;
                int_ce.text = "a=" + std::to_string(tr.a) + " b1=" + std::to_string(tr.b1) +
                              " b2=" + std::to_string(tr.b2) + " f=" + print_poly(f);
            }
        }

        // primality witness in the suite context's own algebra
        static const long primes[3] = {2, 3, 5};
        long p = primes[static_cast<size_t>(k % 3)];
        IdealFG pid = IdealFG::principal(Z, Z.from_int(p));
        Poly fa = gen_rees_poly(rng, ctx, 5);
        Poly fb = gen_rees_poly(rng, ctx, 5);
        uint64_t roll = rng.below(10);
        if (roll < 4) fa = poly_scale(Z, Z.from_int(p), fa);
        else if (roll < 8) fb = poly_scale(Z, Z.from_int(p), fb);
        ReesElem ea = rees_element(ctx, fa);
        ReesElem eb = rees_element(ctx, fb);
        if (star_membership(rees_mul(ea, eb), pid)) {
            ++prim_tested;
            if (star_membership(ea, pid) || star_membership(eb, pid)) {
                ++prim_pass;
            } else {
                ++prim_fail;
                if (!prim_ce.have) {
                    prim_ce.have = true;
                    prim_ce.text = "p=" + std::to_string(p) + " f=" + print_poly(fa) +
                                   " g=" + print_poly(fb);
                }
            }
        }
    }
    rep.check("star-intersection-law", int_pass, int_fail);
    if (int_ce.have) rep.counterexample("star-intersection-law", int_ce.text);
    rep.check("star-primality-witness", prim_pass, prim_fail,
              "tested=" + std::to_string(prim_tested));
    if (prim_ce.have) rep.counterexample("star-primality-witness", prim_ce.text);
    return rep.finish();
}

// ---------------------------------------------------------------------------
// patch-row / patch-matrix: pushed-through corner data pulls back exactly
// ---------------------------------------------------------------------------

SuiteResult suite_patch_row(const ReesCtx& ctx, uint64_t seed, long trials) {
    Rng rng(seed);
    ConductorSquare sq(ctx);
    const AlgebraRef A = sq.algebra();
    SuiteBuilder rep;
    rep.line("suite=patch-row ctx=" + print_rees_ctx(ctx) + " seed=" + std::to_string(seed) +
             " trials=" + std::to_string(trials));

    long pass = 0, failed = 0;
    FirstFailure ce;
    for (long k = 0; k < trials; ++k) {
        int n = 2 + static_cast<int>(rng.below(3));
        UmRow row = gen_um_row(rng, A, n);
        std::vector<Poly> e1, d1, e2, d2;
        for (const auto& e : row.entries) {
            e1.push_back(sq.i1(e));
            e2.push_back(sq.eta1(e));
        }
        for (const auto& d : row.dual) {
            d1.push_back(sq.i1(d));
            d2.push_back(sq.eta1(d));
        }
        bool ok = false;
        try {
            UmRow r1 = um_row(sq.corner_rt(), e1, d1);
            UmRow r2 = um_row(sq.corner_qu(), e2, d2);
            UmRow patched = patch_row(r1, r2, sq);
            ok = patched.entries == row.entries && patched.dual == row.dual;
        } catch (const Error&) {
            ok = false;
        }
        if (ok) {
            ++pass;
        } else {
            ++failed;
            if (!ce.have) {
                ce.have = true;
                ce.text = "row=" + print_row(row.entries) + " dual=" + print_row(row.dual);
            }
        }
    }
    rep.check("row-patching", pass, failed);
    if (ce.have) rep.counterexample("row-patching", ce.text);
    return rep.finish();
}

SuiteResult suite_patch_matrix(const ReesCtx& ctx, uint64_t seed, long trials) {
    Rng rng(seed);
    ConductorSquare sq(ctx);
    const AlgebraRef A = sq.algebra();
    SuiteBuilder rep;
    rep.line("suite=patch-matrix ctx=" + print_rees_ctx(ctx) + " seed=" + std::to_string(seed) +
             " trials=" + std::to_string(trials));

    bool nil_kernel = true;
    for (const auto& g : ctx.a.gens())
        if (!ctx.ring.is_nilpotent(g)) nil_kernel = false;
    bool expect_full = nil_kernel || ctx.a_is_zero || ctx.a_is_unit;

    long gl_pass = 0, gl_fail = 0, sl_pass = 0, sl_fail = 0, e_pass = 0, e_fail = 0;
    FirstFailure ce;
    for (long k = 0; k < trials; ++k) {
        int n = 2 + static_cast<int>(k % 2);
        int len = 5 + static_cast<int>(rng.below(11));
        ElemCert cert = gen_cert(rng, A, n, len, 2);
        Mat m = cert_replay(cert);
        Mat m_inv = cert_replay(cert_inverse(cert));
        Mat m2 = [&] {
            Mat out = m;
            for (auto& cell : out.cells) cell = sq.eta1(cell);
            return out;
        }();
        Mat m2_inv = [&] {
            Mat out = m_inv;
            for (auto& cell : out.cells) cell = sq.eta1(cell);
            return out;
        }();
        PatchMode mode = k % 3 == 0 ? PatchMode::GL : (k % 3 == 1 ? PatchMode::SL : PatchMode::E);
        bool ok = false;
        std::string note;
        try {
            if (mode == PatchMode::E) {
                ElemCert c2 =
                    cert_map_entries(cert, sq.corner_qu(), [&](const Poly& p) { return sq.eta1(p); });
                ElemCert c1{sq.corner_rt(), n, cert.ops};
                PatchedMatrix pm = patch_matrix(m, m_inv, m2, m2_inv, sq, mode, &c1, &c2);
                ok = pm.m == m;
                if (expect_full) {
                    ok = ok && pm.level == CertLevel::FullyElementary && pm.cert_A &&
                         cert_replay(*pm.cert_A) == m;
                    if (pm.cert_A) {
                        auto vr = verify_certificate(*pm.cert_A, mat_identity(A, n), m);
                        ok = ok && vr.ok;
                    }
                } else {
                    ok = ok && pm.level != CertLevel::Failed;
                }
            } else {
                PatchedMatrix pm = patch_matrix(m, m_inv, m2, m2_inv, sq, mode);
                ok = pm.m == m && mat_is_identity(A, mat_mul(A, pm.m, pm.m_inv));
                if (mode == PatchMode::SL) ok = ok && mat_det(A, pm.m) == A.one();
            }
        } catch (const Error& err) {
            ok = false;
            note = err.what();
        }
        if (mode == PatchMode::GL) (ok ? ++gl_pass : ++gl_fail);
        if (mode == PatchMode::SL) (ok ? ++sl_pass : ++sl_fail);
        if (mode == PatchMode::E) (ok ? ++e_pass : ++e_fail);
        if (!ok && !ce.have) {
            ce.have = true;
            ce.text = "mode=" + std::to_string(static_cast<int>(mode)) + " n=" +
                      std::to_string(n) + " cert-len=" + std::to_string(len) +
                      (note.empty() ? "" : " error=" + note);
        }
    }
    rep.check("patch-GL", gl_pass, gl_fail);
    rep.check("patch-SL", sl_pass, sl_fail);
    rep.check("patch-E", e_pass, e_fail);
    if (ce.have) rep.counterexample("patch-matrix", ce.text);
    return rep.finish();
}

// ---------------------------------------------------------------------------
// reduce: patched-pipeline transitivity plus direct-engine cross-validation
// ---------------------------------------------------------------------------

SuiteResult suite_reduce(const ReesCtx& ctx, uint64_t seed, long trials) {
    Rng rng(seed);
    ConductorSquare sq(ctx);
    const AlgebraRef A = AlgebraRef::rees(ctx);
    SuiteBuilder rep;
    rep.line("suite=reduce ctx=" + print_rees_ctx(ctx) + " seed=" + std::to_string(seed) +
             " trials=" + std::to_string(trials));

    bool nil_kernel = true;
    for (const auto& g : ctx.a.gens())
        if (!ctx.ring.is_nilpotent(g)) nil_kernel = false;
    bool expect_full = nil_kernel || ctx.a_is_zero || ctx.a_is_unit;
    const int r = ctx.ring.dim() + 2;

    long patched_pass = 0, patched_fail = 0;
    long direct_pass = 0, direct_fail = 0;
    FirstFailure ce;
    for (long k = 0; k < trials; ++k) {
        UmRow row = gen_um_row(rng, A, r);
        std::vector<Poly> target = unit_row(A, r);
        bool ok = false;
        std::string note;
        try {
            ReductionReport report = reduce_row_rees_patched(ctx, row.entries);
            ok = report.status != CertLevel::Failed;
            if (expect_full)
                ok = ok && report.status == CertLevel::FullyElementary &&
                     report.final_row == target;
            if (report.cert_A) {
                auto vr = verify_certificate(*report.cert_A, row.entries, target);
                ok = ok && vr.ok;
            }
            if (report.cert_corner1) {
                // i1 is the identity on entries
                auto vr = verify_certificate(*report.cert_corner1, row.entries,
                                             unit_row(report.cert_corner1->ambient, r));
                ok = ok && vr.ok;
            }
            if (report.cert_corner2) {
                std::vector<Poly> start2;
                for (const auto& e : row.entries) start2.push_back(sq.eta1(e));
                auto vr = verify_certificate(*report.cert_corner2, start2,
                                             unit_row(report.cert_corner2->ambient, r));
                ok = ok && vr.ok;
            }
        } catch (const Error& err) {
            ok = false;
            note = err.what();
        }
        if (ok) {
            ++patched_pass;
        } else {
            ++patched_fail;
            if (!ce.have) {
                ce.have = true;
                ce.text = "row=" + print_row(row.entries) + (note.empty() ? "" : " error=" + note);
            }
        }

        if (ctx.ring.is_artinian()) {
            bool dok = false;
            std::string dnote;
            try {
                ElemCert direct = reduce_row_artinian(A, row.entries);
                auto vr = verify_certificate(direct, row.entries, target);
                dok = vr.ok;
            } catch (const Error& err) {
                dok = false;
                dnote = err.what();
            }
            if (dok) {
                ++direct_pass;
            } else {
                ++direct_fail;
                if (!ce.have) {
                    ce.have = true;
                    ce.text = "row=" + print_row(row.entries) +
                              (dnote.empty() ? " (direct engine)" : " error=" + dnote);
                }
            }
        }
    }
    rep.check("patched-transitivity", patched_pass, patched_fail);
    if (ctx.ring.is_artinian()) rep.check("direct-cross-validation", direct_pass, direct_fail);
    if (ce.have) rep.counterexample("reduce", ce.text);
    return rep.finish();
}

// ---------------------------------------------------------------------------
// k1: peeling identity
// ---------------------------------------------------------------------------

SuiteResult suite_k1(const ReesCtx& ctx, uint64_t seed, long trials) {
    Rng rng(seed);
    const AlgebraRef A = AlgebraRef::rees(ctx);
    SuiteBuilder rep;
    rep.line("suite=k1 ctx=" + print_rees_ctx(ctx) + " seed=" + std::to_string(seed) +
             " trials=" + std::to_string(trials));

    const int target = std::max(3, ctx.ring.dim() + 2);
    long pass = 0, failed = 0;
    FirstFailure ce;
    for (long k = 0; k < trials; ++k) {
        int n = 4 + static_cast<int>(k % 3);
        int len = 8 + static_cast<int>(rng.below(13));
        ElemCert cert = gen_cert(rng, A, n, len, 2);
        Mat m = cert_replay(cert);
        Mat m_inv = cert_replay(cert_inverse(cert));
        bool ok = false;
        std::string note;
        try {
            K1Result res = k1_reduce(A, m, m_inv, target);
            Mat left = mat_mul(A, mat_mul(A, cert_replay(res.sigma2), m), cert_replay(res.sigma1));
            Mat expected = mat_identity(A, n);
            for (int rr = 0; rr < target; ++rr)
                for (int cc = 0; cc < target; ++cc) expected.at(rr, cc) = res.m.at(rr, cc);
            ok = left == expected && mat_is_identity(A, mat_mul(A, res.m, res.m_inv));
            // independent verifier on the right factor
            auto vr = verify_certificate(res.sigma1, mat_mul(A, cert_replay(res.sigma2), m), expected);
            ok = ok && vr.ok;
        } catch (const Error& err) {
            ok = false;
            note = err.what();
        }
        if (ok) {
            ++pass;
        } else {
            ++failed;
            if (!ce.have) {
                ce.have = true;
                ce.text = "n=" + std::to_string(n) + " cert-len=" + std::to_string(len) +
                          (note.empty() ? "" : " error=" + note);
            }
        }
    }
    rep.check("k1-peeling-identity", pass, failed);
    if (ce.have) rep.counterexample("k1", ce.text);
    return rep.finish();
}

} // namespace

SuiteResult run_suite(SuiteKind kind, const ReesCtx& ctx, uint64_t seed, long trials) {
    switch (kind) {
        case SuiteKind::Square: return suite_square(ctx, seed, trials);
        case SuiteKind::Prop38: return suite_prop38(ctx, seed, trials);
        case SuiteKind::Prop39: return suite_prop39(ctx, seed, trials);
        case SuiteKind::PatchRow: return suite_patch_row(ctx, seed, trials);
        case SuiteKind::PatchMatrix: return suite_patch_matrix(ctx, seed, trials);
        case SuiteKind::Reduce: return suite_reduce(ctx, seed, trials);
        case SuiteKind::K1: return suite_k1(ctx, seed, trials);
    }
    fail(Errc::Internal, "unreachable");
}

} // namespace reeslike
