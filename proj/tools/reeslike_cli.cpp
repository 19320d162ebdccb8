// Command-line front end: parse contexts, rows, matrices and certificates
// from the text formats, run the property suites, patching, reductions and
// K1 size reduction, and emit reports plus machine-checkable certificates.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "reeslike/gen.hpp"
#include "reeslike/suites.hpp"

using namespace reeslike;

namespace {

// Exit-code contract: 0 success (reduce: FullyElementary), 1 operation or
// suite failure (reduce: Failed), 2 malformed input or unusable request,
// 3 reduce finished at CornerCertified.
int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::ParseError:
        case Errc::MalformedElement:
        case Errc::MalformedCertificate:
        case Errc::BoundViolation:
        case Errc::NoCornerSolver:
        case Errc::NoRowSolver:
        case Errc::UnsupportedRing:
        case Errc::UnsupportedQuotient:
        case Errc::PreconditionFailed:
            return 2;
        default:
            return 1;
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) fail(Errc::ParseError, "cannot open output file " + out_path);
        out << text;
    }
}

int cmd_check(const std::string& ctx_str, const std::string& suite_str, uint64_t seed, long trials,
              const std::string& out_path) {
    ReesCtx ctx = parse_rees_ctx(ctx_str);
    SuiteKind kind = suite_from_name(suite_str);
    SuiteResult res = run_suite(kind, ctx, seed, trials);
    emit(res.report, out_path);
    return res.ok ? 0 : 1;
}

int cmd_reduce(const std::string& ctx_str, const std::string& row_path, const std::string& mode,
               const std::string& out_path) {
    ReesCtx ctx = parse_rees_ctx(ctx_str);
    AlgebraRef A = AlgebraRef::rees(ctx);
    RowFile rf = parse_row_file(A, slurp(row_path));
    if (!rf.dual.empty()) um_row(A, rf.entries, rf.dual); // validate the supplied dual
    std::string head = "report reduce mode=" + mode + " ctx=" + print_rees_ctx(ctx) + "\n";

    ReductionReport report;
    if (mode == "direct") {
        try {
            ElemCert cert = reduce_row_artinian(A, rf.entries);
            report.status = CertLevel::FullyElementary;
            report.final_row = row_apply_all(A, rf.entries, cert);
            report.cert_A = std::move(cert);
            report.log.push_back(StageLog{"direct-reduce", true, ""});
        } catch (const Error& e) {
            if (e.code() != Errc::NotUnimodular) throw;
            report.status = CertLevel::Failed;
            report.final_row = rf.entries;
            report.log.push_back(StageLog{"direct-reduce", false, e.what()});
        }
    } else if (mode == "patched") {
        report = reduce_row_rees_patched(ctx, rf.entries);
    } else {
        fail(Errc::ParseError, "mode must be direct or patched");
    }
    emit(print_report(report, head), out_path);
    switch (report.status) {
        case CertLevel::FullyElementary: return 0;
        case CertLevel::CornerCertified: return 3;
        case CertLevel::Failed: return 1;
    }
    return 1;
}

// Shapes a verification input: one bracket row is a row, several are a matrix.
int cmd_verify(const std::string& cert_path, const std::string& start_path,
               const std::string& expected_path) {
    ElemCert cert = parse_cert(slurp(cert_path));
    std::string start_text = slurp(start_path);
    std::string expected_text = slurp(expected_path);
    auto count_rows = [](const std::string& text) {
        std::istringstream in(text);
        std::string line;
        int rows = 0;
        while (std::getline(in, line))
            if (line.find('[') != std::string::npos) ++rows;
        return rows;
    };
    VerifyResult res;
    if (count_rows(start_text) > 1) {
        MatFile start = parse_mat_file(cert.ambient, start_text);
        MatFile expected = parse_mat_file(cert.ambient, expected_text);
        res = verify_certificate(cert, start.m, expected.m);
    } else {
        RowFile start = parse_row_file(cert.ambient, start_text);
        RowFile expected = parse_row_file(cert.ambient, expected_text);
        res = verify_certificate(cert, start.entries, expected.entries);
    }
    std::cout << "verify " << (res.ok ? "ok" : "mismatch") << "\n";
    if (!res.ok) std::cout << "first-diff " << res.diff << "\n";
    return res.ok ? 0 : 1;
}

int cmd_patch(const std::string& ctx_str, const std::string& f_str, const std::string& g_str,
              const std::string& row1_path, const std::string& row2_path,
              const std::string& out_path) {
    ReesCtx ctx = parse_rees_ctx(ctx_str);
    ConductorSquare sq(ctx);
    if (!f_str.empty() || !g_str.empty()) {
        if (f_str.empty() || g_str.empty())
            fail(Errc::ParseError, "element patching needs both --f and --g");
        Poly f = parse_poly(ctx.ring, f_str, 't');
        Poly g = parse_poly(sq.corner_qu().ring, g_str, 'u');
        ReesElem h = patch_element(f, g, sq);
        emit("patched " + print_poly(h.poly) + "\n", out_path);
        return 0;
    }
    if (row1_path.empty() || row2_path.empty())
        fail(Errc::ParseError, "row patching needs --row1 and --row2 (or use --f/--g)");
    RowFile r1 = parse_row_file(sq.corner_rt(), slurp(row1_path));
    RowFile r2 = parse_row_file(sq.corner_qu(), slurp(row2_path));
    if (r1.dual.empty() || r2.dual.empty())
        fail(Errc::ParseError, "row patching requires dual lines in both row files");
    UmRow u1 = um_row(sq.corner_rt(), r1.entries, r1.dual);
    UmRow u2 = um_row(sq.corner_qu(), r2.entries, r2.dual);
    UmRow patched = patch_row(u1, u2, sq);
    std::string text = "patched row " + print_row(patched.entries) + "\n" + "dual " +
                       print_row(patched.dual) + "\n";
    emit(text, out_path);
    return 0;
}

int cmd_k1(const std::string& ctx_str, const std::string& cert_path, const std::string& mat_path,
           int target, const std::string& out_path) {
    ReesCtx ctx = parse_rees_ctx(ctx_str);
    AlgebraRef A = AlgebraRef::rees(ctx);
    Mat m, m_inv;
    if (!cert_path.empty()) {
        ElemCert cert = parse_cert(slurp(cert_path));
        if (!(cert.ambient == A)) fail(Errc::ParseError, "certificate ambient differs from --ctx");
        m = cert_replay(cert);
        m_inv = cert_replay(cert_inverse(cert));
    } else if (!mat_path.empty()) {
        MatFile mf = parse_mat_file(A, slurp(mat_path));
        if (!mf.inverse) fail(Errc::ParseError, "matrix file must carry an inverse block");
        m = std::move(mf.m);
        m_inv = std::move(*mf.inverse);
    } else {
        fail(Errc::ParseError, "k1 needs --cert or --matrix");
    }
    K1Result res = k1_reduce(A, m, m_inv, target);
    Mat left = mat_mul(A, mat_mul(A, cert_replay(res.sigma2), m), cert_replay(res.sigma1));
    Mat expected = mat_identity(A, m.n);
    for (int r = 0; r < res.m.n; ++r)
        for (int c = 0; c < res.m.n; ++c) expected.at(r, c) = res.m.at(r, c);
    bool identity_ok = left == expected;
    std::string text = "report k1 ctx=" + print_rees_ctx(ctx) + " n=" + std::to_string(m.n) +
                       " target=" + std::to_string(target) + "\n";
    text += std::string("stage=peel ok=") + (identity_ok ? "true" : "false") + "\n";
    text += "m_prime\n" + print_mat(res.m);
    text += "sigma1\n" + print_cert(res.sigma1);
    text += "sigma2\n" + print_cert(res.sigma2);
    emit(text, out_path);
    return identity_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic, conductor-square patching and certificate-producing "
                 "elementary reduction over Rees-like algebras R[at, t^2]"};
    app.require_subcommand(1);

    std::string ctx_str, suite_str, out_path, row_path, mode = "patched";
    std::string cert_path, start_path, expected_path, mat_path;
    std::string f_str, g_str, row1_path, row2_path;
    uint64_t seed = 0;
    long trials = 1000;
    int target = 3;

    auto* check = app.add_subcommand("check", "run a seeded property suite");
    check->add_option("--ctx", ctx_str, "Rees context, e.g. rees{ring=Z,a=ideal[2]}")->required();
    check->add_option("--suite", suite_str,
                      "square|prop38|prop39|patch-row|patch-matrix|reduce|k1")->required();
    check->add_option("--seed", seed, "seed for the suite generator");
    check->add_option("--trials", trials, "number of trials");
    check->add_option("--out", out_path, "also write the report to this file");

    auto* reduce = app.add_subcommand("reduce", "reduce a unimodular row to e1");
    reduce->add_option("--ctx", ctx_str)->required();
    reduce->add_option("--row", row_path, "row file: [f1, f2, ...] with optional dual line")
        ->required();
    reduce->add_option("--mode", mode, "direct|patched");
    reduce->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "replay a certificate against start/expected");
    verify->add_option("--cert", cert_path)->required();
    verify->add_option("--start", start_path)->required();
    verify->add_option("--expected", expected_path)->required();

    auto* patch = app.add_subcommand("patch", "pull corner data back through the conductor square");
    patch->add_option("--ctx", ctx_str)->required();
    patch->add_option("--f", f_str, "element of R[t]");
    patch->add_option("--g", g_str, "element of (R/a)[u]");
    patch->add_option("--row1", row1_path, "row file over R[t] with dual");
    patch->add_option("--row2", row2_path, "row file over (R/a)[u] with dual");
    patch->add_option("--out", out_path);

    auto* k1 = app.add_subcommand("k1", "shrink a K1 representative");
    k1->add_option("--ctx", ctx_str)->required();
    k1->add_option("--cert", cert_path, "certificate file whose replay is the matrix");
    k1->add_option("--matrix", mat_path, "matrix file with an inverse block");
    k1->add_option("--target", target, "target size r >= max{3, dim(R)+2}")->required();
    k1->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(ctx_str, suite_str, seed, trials, out_path);
        if (reduce->parsed()) return cmd_reduce(ctx_str, row_path, mode, out_path);
        if (verify->parsed()) return cmd_verify(cert_path, start_path, expected_path);
        if (patch->parsed()) return cmd_patch(ctx_str, f_str, g_str, row1_path, row2_path, out_path);
        if (k1->parsed()) return cmd_k1(ctx_str, cert_path, mat_path, target, out_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
