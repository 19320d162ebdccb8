#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "reeslike/gen.hpp"
#include "reeslike/io.hpp"
#include "reeslike/suites.hpp"

using namespace reeslike;

namespace {

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::Internal;
}

} // namespace

TEST_CASE("ring descriptors round trip") {
    for (const char* s : {"Q", "Z", "Fp:5", "Fp:2", "Zn:12", "Zn:4"}) {
        CHECK(print_ring(parse_ring(s)) == s);
    }
    CHECK(code_of([] { parse_ring("Zn:1"); }) == Errc::ParseError);
    CHECK(code_of([] { parse_ring("Fp:6"); }) == Errc::MalformedElement);
    CHECK(code_of([] { parse_ring("GF:4"); }) == Errc::ParseError);
}

TEST_CASE("elements, ideals, contexts") {
    RingCtx q = RingCtx::rationals();
    CHECK(print_elem(parse_elem(q, "6/4")) == "3/2");
    CHECK(print_elem(parse_elem(q, "-6/4")) == "-3/2");
    RingCtx z4 = RingCtx::modular(4);
    CHECK(print_elem(parse_elem(z4, "7")) == "3");
    CHECK(code_of([&] { parse_elem(q, "1/0"); }) == Errc::MalformedElement);

    RingCtx z = RingCtx::integers();
    IdealFG i = parse_ideal(z, "ideal[6,10]");
    CHECK(i.normal_gen() == z.from_int(2));
    CHECK(print_ideal(i) == "ideal[6,10]");

    ReesCtx ctx = parse_rees_ctx("rees{ring=Z, a=ideal[2]}");
    CHECK(print_rees_ctx(ctx) == "rees{ring=Z,a=ideal[2]}");
    CHECK(ctx.dim_A == 2);
    CHECK(code_of([] { parse_rees_ctx("rees{ring=Z}"); }) == Errc::ParseError);

    AlgebraRef amb = parse_ambient("poly{ring=Fp:2,var=t}");
    CHECK(print_ambient(amb) == "poly{ring=Fp:2,var=t}");
    AlgebraRef amb2 = parse_ambient("rees{ring=Zn:4,a=ideal[2]}");
    CHECK(amb2.is_rees());
}

TEST_CASE("polynomial round trips") {
    RingCtx z = RingCtx::integers();
    for (const char* s :
         {"0", "1", "-1", "t", "-t", "2*t", "1 + t", "1 - t", "2 + 3*t + t^2",
          "7 - 3*t^2 + t^5", "-2 - t^4"}) {
        Poly f = parse_poly(z, s, 't');
        CHECK(print_poly(f) == s);
        CHECK(parse_poly(z, print_poly(f), 't') == f);
    }
    RingCtx q = RingCtx::rationals();
    Poly fq = parse_poly(q, "1/2 + 3/4*t", 't');
    CHECK(print_poly(fq) == "1/2 + 3/4*t");
    CHECK(parse_poly(q, print_poly(fq), 't') == fq);

    // normalization: parse is mod-n canonical, spaces are free
    RingCtx z4 = RingCtx::modular(4);
    CHECK(print_poly(parse_poly(z4, "1+6*t", 't')) == "1 + 2*t");
    CHECK(print_poly(parse_poly(z4, " 1 +   2*t ", 't')) == "1 + 2*t");
    CHECK(parse_poly(z4, "4*t", 't').is_zero());

    // u-polynomials
    Poly g = parse_poly(z4, "1 + u^2", 'u');
    CHECK(print_poly(g) == "1 + u^2");
    CHECK(code_of([&] { parse_poly(z4, "1 + u", 't'); }) == Errc::ParseError);

    // random print/parse round trips
    Rng rng(13);
    for (int k = 0; k < 1000; ++k) {
        Poly f = gen_poly(rng, z, 8, 't');
        CHECK(parse_poly(z, print_poly(f), 't') == f);
        Poly fr = gen_poly(rng, q, 5, 't');
        CHECK(parse_poly(q, print_poly(fr), 't') == fr);
    }
}

TEST_CASE("rows and certificates round trip") {
    ReesCtx ctx = parse_rees_ctx("rees{ring=Zn:4,a=ideal[2]}");
    AlgebraRef A = AlgebraRef::rees(ctx);
    std::vector<Poly> row = parse_row(A, "[1 + 2*t, 2*t]");
    CHECK(row.size() == 2);
    CHECK(print_row(row) == "[1 + 2*t, 2*t]");

    // parity violations are rejected at parse time
    CHECK(code_of([&] { parse_row(A, "[t, 1]"); }) == Errc::ParseError);

    ElemCert cert{A, 2, {ElemOp{0, 1, parse_poly(ctx.ring, "2*t", 't')},
                         ElemOp{1, 0, parse_poly(ctx.ring, "1 + 2*t^2", 't')}}};
    std::string text = print_cert(cert);
    ElemCert back = parse_cert(text);
    CHECK(back.ambient == cert.ambient);
    CHECK(back.n == cert.n);
    REQUIRE(back.ops.size() == 2);
    CHECK(back.ops[0].i == 0);
    CHECK(back.ops[0].j == 1);
    CHECK(back.ops[0].lam == cert.ops[0].lam);
    CHECK(print_cert(back) == text);

    // malformed certificates
    CHECK(code_of([] {
              parse_cert("cert ambient=poly{ring=Fp:2,var=t} n=2\nE 1 3 t\n");
          }) == Errc::MalformedCertificate);
    CHECK(code_of([] {
              parse_cert("cert ambient=rees{ring=Z,a=ideal[2]} n=2\nE 1 2 t\n");
          }) == Errc::MalformedCertificate); // t has unit odd coefficient, not in (2)
    CHECK(code_of([] { parse_cert(""); }) == Errc::ParseError);

    // row file with dual
    RowFile rf = parse_row_file(A, "[1 + 2*t, 2*t]\ndual [1 + 2*t, 0]\n");
    CHECK(rf.dual.size() == 2);

    // matrix file with inverse block
    AlgebraRef P = parse_ambient("poly{ring=Fp:2,var=t}");
    MatFile mf = parse_mat_file(P, "[1, t]\n[0, 1]\ninverse\n[1, t]\n[0, 1]\n");
    CHECK(mf.m.n == 2);
    REQUIRE(mf.inverse.has_value());
    CHECK(mat_is_identity(P, mat_mul(P, mf.m, *mf.inverse)));
}

TEST_CASE("shrinking drops trailing coefficients, then magnitudes") {
    RingCtx z = RingCtx::integers();
    // "failure" = some coefficient has absolute value >= 4
    FailPred big_coeff = [&](const std::vector<Poly>& s) {
        for (const auto& f : s)
            for (const auto& c : f.coeffs)
                if (abs(c.num) >= 4) return true;
        return false;
    };
    std::vector<Poly> sample = {parse_poly(z, "1 + 17*t + 3*t^2 + 9*t^5", 't'),
                                parse_poly(z, "2 + 5*t^3", 't')};
    std::vector<Poly> small = shrink_sample(z, sample, big_coeff);
    REQUIRE(big_coeff(small));
    // locally minimal: a single surviving coefficient that can be neither
    // zeroed nor halved without losing the failure
    size_t nonzero = 0;
    Int biggest = 0;
    for (const auto& f : small)
        for (const auto& c : f.coeffs)
            if (c.num != 0) { ++nonzero; biggest = std::max(biggest, Int(abs(c.num))); }
    CHECK(nonzero == 1);
    CHECK(biggest >= 4);
    CHECK(biggest <= 7); // halving it would drop below the failure threshold

    // a sample that never fails is returned unchanged
    std::vector<Poly> keep = {parse_poly(z, "1 + t", 't')};
    CHECK(shrink_sample(z, keep, [](const std::vector<Poly>&) { return false; }) == keep);
}

TEST_CASE("reports are stable text") {
    ReesCtx ctx = parse_rees_ctx("rees{ring=Zn:4,a=ideal[2]}");
    AlgebraRef A = AlgebraRef::rees(ctx);
    ReductionReport rep;
    rep.status = CertLevel::FullyElementary;
    rep.final_row = unit_row(A, 2);
    rep.log.push_back(StageLog{"corner1-reduce", true, "solver=artinian"});
    rep.cert_A = ElemCert{A, 2, {ElemOp{0, 1, parse_poly(ctx.ring, "2*t", 't')}}};
    std::string a = print_report(rep, "report reduce mode=direct ctx=" + print_rees_ctx(ctx) + "\n");
    std::string b = print_report(rep, "report reduce mode=direct ctx=" + print_rees_ctx(ctx) + "\n");
    CHECK(a == b);
    CHECK(a.find("stage=corner1-reduce ok=true") != std::string::npos);
    CHECK(a.find("status=FullyElementary") != std::string::npos);
    CHECK(a.find("E 1 2 2*t") != std::string::npos);
}
