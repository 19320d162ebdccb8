#include "reeslike/io.hpp"

#include <cctype>
#include <sstream>

namespace reeslike {

// ---------------------------------------------------------------------------
// Printers
// ---------------------------------------------------------------------------

std::string print_ring(const RingCtx& ring) {
    switch (ring.tag()) {
        case RingTag::RationalField: return "Q";
        case RingTag::Integers: return "Z";
        case RingTag::PrimeField: return "Fp:" + ring.modulus().get_str();
        case RingTag::ModularRing: return "Zn:" + ring.modulus().get_str();
    }
    return "?";
}

std::string print_elem(const RingElem& e) {
    if (e.den == 1) return e.num.get_str();
    return e.num.get_str() + "/" + e.den.get_str();
}

std::string print_ideal(const IdealFG& ideal) {
    std::string s = "ideal[";
    if (ideal.gens().empty()) {
        s += "0";
    } else {
        for (size_t k = 0; k < ideal.gens().size(); ++k) {
            if (k) s += ",";
            s += print_elem(ideal.gens()[k]);
        }
    }
    return s + "]";
}

std::string print_rees_ctx(const ReesCtx& ctx) {
    return "rees{ring=" + print_ring(ctx.ring) + ",a=" + print_ideal(ctx.a) + "}";
}

std::string print_ambient(const AlgebraRef& amb) {
    if (amb.is_rees()) return print_rees_ctx(amb.rees_ctx());
    return std::string("poly{ring=") + print_ring(amb.ring) + ",var=" + amb.var + "}";
}

static std::string print_term(const RingElem& c, size_t deg, char var, bool abs_value) {
    RingElem cc = c;
    if (abs_value && cc.num < 0) cc.num = -cc.num;
    std::string coeff = print_elem(cc);
    if (deg == 0) return coeff;
    std::string tail(1, var);
    if (deg >= 2) tail += "^" + std::to_string(deg);
    if (cc.num == 1 && cc.den == 1) return tail;
    return coeff + "*" + tail;
}

std::string print_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (size_t k = 0; k < f.coeffs.size(); ++k) {
        const RingElem& c = f.coeffs[k];
        if (c.num == 0) continue;
        if (first) {
            if (c.num < 0) s += "-";
            s += print_term(c, k, f.var, true);
            first = false;
        } else {
            s += (c.num < 0) ? " - " : " + ";
            s += print_term(c, k, f.var, true);
        }
    }
    return s.empty() ? "0" : s;
}

std::string print_row(const std::vector<Poly>& row) {
    std::string s = "[";
    for (size_t k = 0; k < row.size(); ++k) {
        if (k) s += ", ";
        s += print_poly(row[k]);
    }
    return s + "]";
}

std::string print_mat(const Mat& m) {
    std::string s;
    for (int r = 0; r < m.n; ++r) {
        std::vector<Poly> row(m.cells.begin() + static_cast<size_t>(r) * m.n,
                              m.cells.begin() + static_cast<size_t>(r + 1) * m.n);
        s += print_row(row);
        s += "\n";
    }
    return s;
}

std::string print_cert(const ElemCert& cert) {
    std::string s = "cert ambient=" + print_ambient(cert.ambient) + " n=" + std::to_string(cert.n) + "\n";
    for (const auto& op : cert.ops)
        s += "E " + std::to_string(op.i + 1) + " " + std::to_string(op.j + 1) + " " +
             print_poly(op.lam) + "\n";
    return s;
}

std::string print_report(const ReductionReport& report, const std::string& head) {
    std::string s = head;
    for (const auto& entry : report.log) {
        s += "stage=" + entry.stage + " ok=" + (entry.ok ? "true" : "false");
        if (!entry.note.empty()) s += " note=" + entry.note;
        s += "\n";
    }
    s += std::string("status=") + cert_level_name(report.status) + "\n";
    s += "final=" + print_row(report.final_row) + "\n";
    if (report.cert_A) s += "cert_A\n" + print_cert(*report.cert_A);
    if (report.cert_corner1) s += "cert_corner1\n" + print_cert(*report.cert_corner1);
    if (report.cert_corner2) s += "cert_corner2\n" + print_cert(*report.cert_corner2);
    return s;
}

// ---------------------------------------------------------------------------
// Parsers: a small recursive-descent scanner, whitespace-insensitive.
// ---------------------------------------------------------------------------

namespace {

struct Scanner {
    const std::string& text;
    size_t pos = 0;

    explicit Scanner(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            fail(Errc::ParseError, std::string("expected '") + c + "' at position " +
                                       std::to_string(pos) + " in \"" + text + "\"");
    }
    bool eat_word(const std::string& w) {
        skip_ws();
        if (text.compare(pos, w.size(), w) == 0) {
            pos += w.size();
            return true;
        }
        return false;
    }
    Int integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) fail(Errc::ParseError, "expected an integer in \"" + text + "\"");
        return Int(text.substr(start, pos - start));
    }
    unsigned long uinteger() {
        Int v = integer();
        if (v < 0 || !v.fits_ulong_p()) fail(Errc::ParseError, "expected a small nonnegative integer");
        return v.get_ui();
    }
};

RingCtx parse_ring_at(Scanner& sc) {
    if (sc.eat_word("Fp:")) return RingCtx::prime_field(sc.integer());
    if (sc.eat_word("Zn:")) {
        Int n = sc.integer();
        if (n < 2) fail(Errc::ParseError, "Zn modulus must be >= 2");
        return RingCtx::modular(n);
    }
    if (sc.eat_word("Q")) return RingCtx::rationals();
    if (sc.eat_word("Z")) return RingCtx::integers();
    fail(Errc::ParseError, "expected a ring descriptor (Q, Fp:p, Z, Zn:n)");
}

RingElem parse_elem_at(Scanner& sc, const RingCtx& ring) {
    Int num = sc.integer();
    Int den = 1;
    if (sc.eat('/')) den = sc.integer();
    return ring.canon(num, den);
}

IdealFG parse_ideal_at(Scanner& sc, const RingCtx& ring) {
    if (!sc.eat_word("ideal[")) fail(Errc::ParseError, "expected ideal[...]");
    std::vector<RingElem> gens;
    if (!sc.eat(']')) {
        gens.push_back(parse_elem_at(sc, ring));
        while (sc.eat(',')) gens.push_back(parse_elem_at(sc, ring));
        sc.expect(']');
    }
    return IdealFG(ring, std::move(gens));
}

ReesCtx parse_rees_ctx_at(Scanner& sc) {
    if (!sc.eat_word("rees{")) fail(Errc::ParseError, "expected rees{...}");
    if (!sc.eat_word("ring=")) fail(Errc::ParseError, "expected ring=");
    RingCtx ring = parse_ring_at(sc);
    sc.expect(',');
    if (!sc.eat_word("a=")) fail(Errc::ParseError, "expected a=");
    IdealFG a = parse_ideal_at(sc, ring);
    sc.expect('}');
    return ReesCtx::make(std::move(ring), std::move(a));
}

// term := [sign] (rational ['*' var ['^' k]] | var ['^' k])
// poly := term (('+'|'-') term)*
Poly parse_poly_at(Scanner& sc, const RingCtx& ring, char var, bool fixed_var) {
    Poly acc = poly_zero(var);
    bool first = true;
    while (true) {
        sc.skip_ws();
        int sign = 1;
        if (sc.eat('-')) sign = -1;
        else if (sc.eat('+')) sign = 1;
        else if (!first) break;
        sc.skip_ws();
        RingElem coeff = ring.one();
        bool have_coeff = false;
        if (sc.pos < sc.text.size() &&
            (std::isdigit(static_cast<unsigned char>(sc.text[sc.pos])))) {
            coeff = parse_elem_at(sc, ring);
            have_coeff = true;
        }
        size_t deg = 0;
        bool have_var = false;
        if (!have_coeff || sc.eat('*')) {
            sc.skip_ws();
            char v = sc.pos < sc.text.size() ? sc.text[sc.pos] : '\0';
            if (v == 't' || v == 'u' || v == 'x') {
                if (fixed_var && v != var)
                    fail(Errc::ParseError, std::string("unexpected variable '") + v + "'");
                if (!fixed_var) {
                    if (!acc.is_zero() && acc.var != v && acc.degree() > 0)
                        fail(Errc::ParseError, "mixed variables in one polynomial");
                    acc.var = v;
                }
                ++sc.pos;
                have_var = true;
                deg = 1;
                if (sc.eat('^')) deg = sc.uinteger();
            } else if (!have_coeff) {
                fail(Errc::ParseError, "expected a term in \"" + sc.text + "\"");
            }
        }
        if (!have_coeff && !have_var) fail(Errc::ParseError, "expected a term");
        if (sign < 0) coeff = ring.neg(coeff);
        acc = poly_add(ring, acc, poly_monomial(ring, coeff, deg, acc.var));
        first = false;
    }
    return acc;
}

std::vector<Poly> parse_row_at(Scanner& sc, const RingCtx& ring, char var) {
    sc.expect('[');
    std::vector<Poly> row;
    if (!sc.eat(']')) {
        row.push_back(parse_poly_at(sc, ring, var, true));
        while (sc.eat(',')) row.push_back(parse_poly_at(sc, ring, var, true));
        sc.expect(']');
    }
    return row;
}

void expect_done(Scanner& sc) {
    if (!sc.done()) fail(Errc::ParseError, "trailing input at position " + std::to_string(sc.pos));
}

std::vector<std::string> nonblank_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
        if (!blank) lines.push_back(line);
    }
    return lines;
}

} // namespace

RingCtx parse_ring(const std::string& text) {
    Scanner sc(text);
    RingCtx r = parse_ring_at(sc);
    expect_done(sc);
    return r;
}

RingElem parse_elem(const RingCtx& ring, const std::string& text) {
    Scanner sc(text);
    RingElem e = parse_elem_at(sc, ring);
    expect_done(sc);
    return e;
}

IdealFG parse_ideal(const RingCtx& ring, const std::string& text) {
    Scanner sc(text);
    IdealFG i = parse_ideal_at(sc, ring);
    expect_done(sc);
    return i;
}

ReesCtx parse_rees_ctx(const std::string& text) {
    Scanner sc(text);
    ReesCtx c = parse_rees_ctx_at(sc);
    expect_done(sc);
    return c;
}

AlgebraRef parse_ambient(const std::string& text) {
    Scanner sc(text);
    if (sc.peek() == 'r') {
        ReesCtx c = parse_rees_ctx_at(sc);
        expect_done(sc);
        return AlgebraRef::rees(c);
    }
    if (!sc.eat_word("poly{")) fail(Errc::ParseError, "expected rees{...} or poly{...}");
    if (!sc.eat_word("ring=")) fail(Errc::ParseError, "expected ring=");
    RingCtx ring = parse_ring_at(sc);
    sc.expect(',');
    if (!sc.eat_word("var=")) fail(Errc::ParseError, "expected var=");
    sc.skip_ws();
    char var = sc.pos < sc.text.size() ? sc.text[sc.pos++] : '\0';
    if (var != 't' && var != 'u' && var != 'x') fail(Errc::ParseError, "variable must be t, u or x");
    sc.expect('}');
    expect_done(sc);
    return AlgebraRef::poly_ring(std::move(ring), var);
}

Poly parse_poly(const RingCtx& ring, const std::string& text, char var) {
    Scanner sc(text);
    Poly f = parse_poly_at(sc, ring, var, true);
    expect_done(sc);
    return f;
}

Poly parse_poly_any(const RingCtx& ring, const std::string& text, char fallback_var) {
    Scanner sc(text);
    Poly f = parse_poly_at(sc, ring, fallback_var, false);
    expect_done(sc);
    return f;
}

std::vector<Poly> parse_row(const AlgebraRef& amb, const std::string& text) {
    Scanner sc(text);
    std::vector<Poly> row = parse_row_at(sc, amb.ring, amb.var);
    expect_done(sc);
    for (const auto& e : row) amb.require_element(e, Errc::ParseError);
    return row;
}

ElemCert parse_cert(const std::string& text) {
    auto lines = nonblank_lines(text);
    if (lines.empty()) fail(Errc::ParseError, "empty certificate file");
    Scanner head(lines[0]);
    if (!head.eat_word("cert")) fail(Errc::ParseError, "expected 'cert' header");
    if (!head.eat_word("ambient=")) fail(Errc::ParseError, "expected ambient=");
    // The ambient handle runs until the " n=" marker.
    size_t nmark = lines[0].rfind(" n=");
    if (nmark == std::string::npos || nmark < head.pos)
        fail(Errc::ParseError, "expected n= in certificate header");
    AlgebraRef amb = parse_ambient(lines[0].substr(head.pos, nmark - head.pos));
    Scanner tail(lines[0]);
    tail.pos = nmark + 3;
    unsigned long n = tail.uinteger();
    expect_done(tail);

    ElemCert cert{amb, static_cast<int>(n), {}};
    for (size_t k = 1; k < lines.size(); ++k) {
        Scanner sc(lines[k]);
        if (!sc.eat('E')) fail(Errc::ParseError, "expected op line 'E i j <element>'");
        long i = static_cast<long>(sc.uinteger());
        long j = static_cast<long>(sc.uinteger());
        if (i < 1 || j < 1 || i > static_cast<long>(n) || j > static_cast<long>(n) || i == j)
            fail(Errc::MalformedCertificate, "op indices out of range on line " + std::to_string(k + 1));
        Poly lam = parse_poly_at(sc, amb.ring, amb.var, true);
        expect_done(sc);
        cert.ops.push_back(ElemOp{static_cast<int>(i - 1), static_cast<int>(j - 1), std::move(lam)});
    }
    cert_validate(cert);
    return cert;
}

RowFile parse_row_file(const AlgebraRef& amb, const std::string& text) {
    auto lines = nonblank_lines(text);
    if (lines.empty()) fail(Errc::ParseError, "empty row file");
    RowFile out;
    out.entries = parse_row(amb, lines[0]);
    if (lines.size() >= 2) {
        Scanner sc(lines[1]);
        if (!sc.eat_word("dual")) fail(Errc::ParseError, "expected 'dual [...]' on line 2");
        out.dual = parse_row_at(sc, amb.ring, amb.var);
        expect_done(sc);
        for (const auto& e : out.dual) amb.require_element(e, Errc::ParseError);
    }
    if (lines.size() > 2) fail(Errc::ParseError, "unexpected extra lines in row file");
    return out;
}

MatFile parse_mat_file(const AlgebraRef& amb, const std::string& text) {
    auto lines = nonblank_lines(text);
    if (lines.empty()) fail(Errc::ParseError, "empty matrix file");
    std::vector<std::vector<Poly>> rows;
    size_t k = 0;
    for (; k < lines.size(); ++k) {
        Scanner sc(lines[k]);
        if (sc.peek() != '[') break;
        rows.push_back(parse_row(amb, lines[k]));
    }
    const size_t n = rows.size();
    if (n == 0) fail(Errc::ParseError, "expected bracket rows");
    for (const auto& r : rows)
        if (r.size() != n) fail(Errc::ParseError, "matrix is not square");
    MatFile out;
    out.m.n = static_cast<int>(n);
    for (auto& r : rows)
        for (auto& cell : r) out.m.cells.push_back(std::move(cell));
    if (k < lines.size()) {
        Scanner sc(lines[k]);
        if (!sc.eat_word("inverse")) fail(Errc::ParseError, "expected 'inverse' separator");
        ++k;
        if (lines.size() - k != n) fail(Errc::ParseError, "inverse block has wrong row count");
        Mat inv;
        inv.n = static_cast<int>(n);
        for (size_t r = 0; r < n; ++r) {
            auto row = parse_row(amb, lines[k + r]);
            if (row.size() != n) fail(Errc::ParseError, "inverse matrix is not square");
            for (auto& cell : row) inv.cells.push_back(std::move(cell));
        }
        out.inverse = std::move(inv);
    }
    return out;
}

} // namespace reeslike
