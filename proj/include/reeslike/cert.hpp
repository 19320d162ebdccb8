#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "reeslike/rees.hpp"

namespace reeslike {

/// Handle to one of the ambient algebras certificates live over: a plain
/// polynomial ring R[var] or a Rees-like algebra R[at, t^2] inside R[t].
struct AlgebraRef {
    enum class Kind { Poly, Rees };

    Kind kind;
    RingCtx ring;
    std::optional<IdealFG> ideal; // Rees only
    char var;

    static AlgebraRef poly_ring(RingCtx r, char var) {
        return AlgebraRef{Kind::Poly, std::move(r), std::nullopt, var};
    }
    static AlgebraRef rees(const ReesCtx& ctx) {
        return AlgebraRef{Kind::Rees, ctx.ring, ctx.a, 't'};
    }

    bool is_rees() const { return kind == Kind::Rees; }
    ReesCtx rees_ctx() const;

    bool valid_element(const Poly& f) const;
    void require_element(const Poly& f, Errc code) const;

    Poly add(const Poly& f, const Poly& g) const;
    Poly sub(const Poly& f, const Poly& g) const;
    Poly mul(const Poly& f, const Poly& g) const;
    Poly zero() const { return poly_zero(var); }
    Poly one() const { return poly_one(ring, var); }

    bool operator==(const AlgebraRef& o) const;
};

/// Right multiplication by e_{ij}(lam): column j gains lam * column i; on a
/// row vector v this is v[j] += lam * v[i]. Indices are 0-based in memory
/// and 1-based in the text format.
struct ElemOp {
    int i;
    int j;
    Poly lam;
};

/// Ordered list of elementary operations over a named ambient algebra.
/// Replaying the ops from the identity gives the recorded product; the list
/// composes left-to-right.
struct ElemCert {
    AlgebraRef ambient;
    int n = 0;
    std::vector<ElemOp> ops;
};

// Throws MalformedCertificate on bad indices or ambient-invalid lambdas.
void cert_validate(const ElemCert& cert);

// Reversed ops with negated lambdas; replay is the inverse matrix.
ElemCert cert_inverse(const ElemCert& cert);

ElemCert cert_concat(ElemCert a, const ElemCert& b);

// Entrywise image of a certificate under a coefficient transform (a ring
// map between ambients); ops whose image is zero are dropped.
ElemCert cert_map_entries(const ElemCert& cert, const AlgebraRef& target,
                          const std::function<Poly(const Poly&)>& f);

// ---------------------------------------------------------------------------
// Square matrices over an ambient algebra
// ---------------------------------------------------------------------------

struct Mat {
    int n = 0;
    std::vector<Poly> cells; // row-major

    Poly& at(int r, int c) { return cells[static_cast<size_t>(r) * n + c]; }
    const Poly& at(int r, int c) const { return cells[static_cast<size_t>(r) * n + c]; }

    bool operator==(const Mat&) const = default;
};

Mat mat_identity(const AlgebraRef& amb, int n);
Mat mat_mul(const AlgebraRef& amb, const Mat& a, const Mat& b);
bool mat_is_identity(const AlgebraRef& amb, const Mat& m);
Poly mat_det(const AlgebraRef& amb, const Mat& m); // Laplace expansion, exact

// apply one op in place
void mat_apply_right(const AlgebraRef& amb, Mat& m, const ElemOp& op); // m <- m * e_ij(lam)
void mat_apply_left(const AlgebraRef& amb, Mat& m, const ElemOp& op);  // m <- e_ij(lam) * m
void row_apply(const AlgebraRef& amb, std::vector<Poly>& v, const ElemOp& op);
// transport of a dual column under the same op: d[i] -= lam * d[j]
void dual_apply(const AlgebraRef& amb, std::vector<Poly>& d, const ElemOp& op);

Mat cert_replay(const ElemCert& cert);                    // product from identity
std::vector<Poly> row_apply_all(const AlgebraRef& amb, std::vector<Poly> v, const ElemCert& cert);
Mat mat_apply_right_all(const AlgebraRef& amb, Mat m, const ElemCert& cert);
Mat mat_apply_left_all(const AlgebraRef& amb, Mat m, const ElemCert& cert);

std::vector<Poly> unit_row(const AlgebraRef& amb, int n, int pos = 0); // e_{pos+1}

Poly row_dot(const AlgebraRef& amb, const std::vector<Poly>& a, const std::vector<Poly>& b);

// ---------------------------------------------------------------------------
// Unimodular rows
// ---------------------------------------------------------------------------

/// A row with a verified dual: sum entries[k] * dual[k] == 1 exactly.
struct UmRow {
    AlgebraRef ambient;
    std::vector<Poly> entries;
    std::vector<Poly> dual;
};

// Validates entries/dual against the ambient and checks the pairing.
UmRow um_row(const AlgebraRef& amb, std::vector<Poly> entries, std::vector<Poly> dual);

// ---------------------------------------------------------------------------
// Independent verifier
// ---------------------------------------------------------------------------

struct VerifyResult {
    bool ok = false;
    std::string diff; // empty when ok; otherwise locates the first difference
};

// Replays cert on start by exact arithmetic (its own loop, not the solver
// helpers) and compares against expected.
VerifyResult verify_certificate(const ElemCert& cert, const std::vector<Poly>& start,
                                const std::vector<Poly>& expected);
VerifyResult verify_certificate(const ElemCert& cert, const Mat& start, const Mat& expected);

} // namespace reeslike
