#pragma once

#include <string>
#include <vector>

#include "reeslike/reduce.hpp"

namespace reeslike {

// Text formats used by the CLI and the certificate files. Printing is
// canonical; parse(print(x)) == x for every value the library produces.

std::string print_ring(const RingCtx& ring);            // Q, Fp:5, Z, Zn:12
std::string print_elem(const RingElem& e);              // decimal, a/b over Q
std::string print_ideal(const IdealFG& ideal);          // ideal[g1,g2,...]
std::string print_rees_ctx(const ReesCtx& ctx);         // rees{ring=Z,a=ideal[2]}
std::string print_ambient(const AlgebraRef& amb);       // rees{...} | poly{ring=..,var=..}
std::string print_poly(const Poly& f);                  // 2 + 3*t + t^2
std::string print_row(const std::vector<Poly>& row);    // [f1, f2, ...]
std::string print_mat(const Mat& m);                    // one bracket row per line
std::string print_cert(const ElemCert& cert);           // header + one op per line
std::string print_report(const ReductionReport& report, const std::string& head);

RingCtx parse_ring(const std::string& text);
RingElem parse_elem(const RingCtx& ring, const std::string& text);
IdealFG parse_ideal(const RingCtx& ring, const std::string& text);
ReesCtx parse_rees_ctx(const std::string& text);
AlgebraRef parse_ambient(const std::string& text);
Poly parse_poly(const RingCtx& ring, const std::string& text, char var);
// Polynomial with either variable; the label is read from the text itself
// (constants get `fallback_var`).
Poly parse_poly_any(const RingCtx& ring, const std::string& text, char fallback_var);
std::vector<Poly> parse_row(const AlgebraRef& amb, const std::string& text);
ElemCert parse_cert(const std::string& text);

/// Row file: a bracket row, optionally followed by `dual [...]`.
struct RowFile {
    std::vector<Poly> entries;
    std::vector<Poly> dual; // empty when absent
};
RowFile parse_row_file(const AlgebraRef& amb, const std::string& text);

/// Matrix file: n bracket rows, optionally `inverse` and n more rows.
struct MatFile {
    Mat m;
    std::optional<Mat> inverse;
};
MatFile parse_mat_file(const AlgebraRef& amb, const std::string& text);

} // namespace reeslike
