#include "reeslike/cert.hpp"

#include <algorithm>

namespace reeslike {

ReesCtx AlgebraRef::rees_ctx() const {
    if (kind != Kind::Rees) fail(Errc::PreconditionFailed, "not a Rees-like ambient");
    return ReesCtx::make(ring, *ideal);
}

bool AlgebraRef::valid_element(const Poly& f) const {
    if (!f.is_zero() && f.var != var) return false;
    if (kind == Kind::Rees) {
        for (size_t k = 1; k < f.coeffs.size(); k += 2)
            if (!ideal->contains(f.coeffs[k])) return false;
    }
    return true;
}

void AlgebraRef::require_element(const Poly& f, Errc code) const {
    if (!valid_element(f)) fail(code, "element outside the ambient algebra");
}

Poly AlgebraRef::add(const Poly& f, const Poly& g) const { return poly_add(ring, f, g); }
Poly AlgebraRef::sub(const Poly& f, const Poly& g) const { return poly_sub(ring, f, g); }
Poly AlgebraRef::mul(const Poly& f, const Poly& g) const { return poly_mul(ring, f, g); }

bool AlgebraRef::operator==(const AlgebraRef& o) const {
    if (kind != o.kind || !(ring == o.ring) || var != o.var) return false;
    if (kind == Kind::Rees) return ideal->same_ideal(*o.ideal);
    return true;
}

// ---------------------------------------------------------------------------

void cert_validate(const ElemCert& cert) {
    if (cert.n < 1) fail(Errc::MalformedCertificate, "certificate size must be >= 1");
    for (const auto& op : cert.ops) {
        if (op.i < 0 || op.j < 0 || op.i >= cert.n || op.j >= cert.n)
            fail(Errc::MalformedCertificate, "op index out of range");
        if (op.i == op.j) fail(Errc::MalformedCertificate, "op with i == j");
        if (!cert.ambient.valid_element(op.lam))
            fail(Errc::MalformedCertificate, "op coefficient outside the ambient algebra");
    }
}

ElemCert cert_inverse(const ElemCert& cert) {
    ElemCert inv{cert.ambient, cert.n, {}};
    inv.ops.reserve(cert.ops.size());
    for (auto it = cert.ops.rbegin(); it != cert.ops.rend(); ++it)
        inv.ops.push_back(ElemOp{it->i, it->j, poly_neg(cert.ambient.ring, it->lam)});
    return inv;
}

ElemCert cert_concat(ElemCert a, const ElemCert& b) {
    if (!(a.ambient == b.ambient) || a.n != b.n)
        fail(Errc::PreconditionFailed, "certificate concat over different ambients");
    a.ops.insert(a.ops.end(), b.ops.begin(), b.ops.end());
    return a;
}

ElemCert cert_map_entries(const ElemCert& cert, const AlgebraRef& target,
                          const std::function<Poly(const Poly&)>& f) {
    ElemCert out{target, cert.n, {}};
    out.ops.reserve(cert.ops.size());
    for (const auto& op : cert.ops) {
        Poly lam = f(op.lam);
        if (lam.is_zero()) continue;
        out.ops.push_back(ElemOp{op.i, op.j, std::move(lam)});
    }
    return out;
}

// ---------------------------------------------------------------------------

Mat mat_identity(const AlgebraRef& amb, int n) {
    Mat m;
    m.n = n;
    m.cells.assign(static_cast<size_t>(n) * n, amb.zero());
    for (int k = 0; k < n; ++k) m.at(k, k) = amb.one();
    return m;
}

Mat mat_mul(const AlgebraRef& amb, const Mat& a, const Mat& b) {
    if (a.n != b.n) fail(Errc::PreconditionFailed, "matrix size mismatch");
    Mat out;
    out.n = a.n;
    out.cells.assign(a.cells.size(), amb.zero());
    for (int r = 0; r < a.n; ++r)
        for (int k = 0; k < a.n; ++k) {
            if (a.at(r, k).is_zero()) continue;
            for (int c = 0; c < a.n; ++c) {
                if (b.at(k, c).is_zero()) continue;
                out.at(r, c) = amb.add(out.at(r, c), amb.mul(a.at(r, k), b.at(k, c)));
            }
        }
    return out;
}

bool mat_is_identity(const AlgebraRef& amb, const Mat& m) {
    return m == mat_identity(amb, m.n);
}

static Poly det_laplace(const AlgebraRef& amb, const Mat& m, std::vector<int>& cols, int row) {
    if (cols.empty()) return amb.one();
    Poly acc = amb.zero();
    for (size_t pick = 0; pick < cols.size(); ++pick) {
        int c = cols[pick];
        if (m.at(row, c).is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (size_t k = 0; k < cols.size(); ++k)
            if (k != pick) rest.push_back(cols[k]);
        Poly sub = det_laplace(amb, m, rest, row + 1);
        Poly term = amb.mul(m.at(row, c), sub);
        acc = (pick % 2 == 0) ? amb.add(acc, term) : amb.sub(acc, term);
    }
    return acc;
}

Poly mat_det(const AlgebraRef& amb, const Mat& m) {
    std::vector<int> cols(m.n);
    for (int k = 0; k < m.n; ++k) cols[k] = k;
    return det_laplace(amb, m, cols, 0);
}

void mat_apply_right(const AlgebraRef& amb, Mat& m, const ElemOp& op) {
    for (int r = 0; r < m.n; ++r)
        m.at(r, op.j) = amb.add(m.at(r, op.j), amb.mul(op.lam, m.at(r, op.i)));
}

void mat_apply_left(const AlgebraRef& amb, Mat& m, const ElemOp& op) {
    for (int c = 0; c < m.n; ++c)
        m.at(op.i, c) = amb.add(m.at(op.i, c), amb.mul(op.lam, m.at(op.j, c)));
}

void row_apply(const AlgebraRef& amb, std::vector<Poly>& v, const ElemOp& op) {
    v[op.j] = amb.add(v[op.j], amb.mul(op.lam, v[op.i]));
}

void dual_apply(const AlgebraRef& amb, std::vector<Poly>& d, const ElemOp& op) {
    d[op.i] = amb.sub(d[op.i], amb.mul(op.lam, d[op.j]));
}

Mat cert_replay(const ElemCert& cert) {
    Mat m = mat_identity(cert.ambient, cert.n);
    for (const auto& op : cert.ops) mat_apply_right(cert.ambient, m, op);
    return m;
}

std::vector<Poly> row_apply_all(const AlgebraRef& amb, std::vector<Poly> v, const ElemCert& cert) {
    for (const auto& op : cert.ops) row_apply(amb, v, op);
    return v;
}

Mat mat_apply_right_all(const AlgebraRef& amb, Mat m, const ElemCert& cert) {
    for (const auto& op : cert.ops) mat_apply_right(amb, m, op);
    return m;
}

Mat mat_apply_left_all(const AlgebraRef& amb, Mat m, const ElemCert& cert) {
    for (const auto& op : cert.ops) mat_apply_left(amb, m, op);
    return m;
}

std::vector<Poly> unit_row(const AlgebraRef& amb, int n, int pos) {
    std::vector<Poly> v(static_cast<size_t>(n), amb.zero());
    v[pos] = amb.one();
    return v;
}

Poly row_dot(const AlgebraRef& amb, const std::vector<Poly>& a, const std::vector<Poly>& b) {
    if (a.size() != b.size()) fail(Errc::PreconditionFailed, "row length mismatch");
    Poly acc = amb.zero();
    for (size_t k = 0; k < a.size(); ++k) acc = amb.add(acc, amb.mul(a[k], b[k]));
    return acc;
}

UmRow um_row(const AlgebraRef& amb, std::vector<Poly> entries, std::vector<Poly> dual) {
    if (entries.size() != dual.size() || entries.empty())
        fail(Errc::PreconditionFailed, "row/dual length mismatch");
    for (const auto& e : entries) amb.require_element(e, Errc::MalformedElement);
    for (const auto& d : dual) amb.require_element(d, Errc::MalformedElement);
    if (row_dot(amb, entries, dual) != amb.one())
        fail(Errc::DualMismatch, "dual does not pair to 1");
    return UmRow{amb, std::move(entries), std::move(dual)};
}

// ---------------------------------------------------------------------------
// Verifier. Replays with its own loops on purpose: the only shared code
// with the solvers is base polynomial arithmetic.
// ---------------------------------------------------------------------------

static std::string poly_brief(const Poly& f);

VerifyResult verify_certificate(const ElemCert& cert, const std::vector<Poly>& start,
                                const std::vector<Poly>& expected) {
    cert_validate(cert);
    if (static_cast<int>(start.size()) != cert.n)
        fail(Errc::MalformedCertificate, "start row size does not match certificate");
    if (start.size() != expected.size())
        fail(Errc::MalformedCertificate, "expected row size does not match");
    const RingCtx& R = cert.ambient.ring;
    std::vector<Poly> v = start;
    for (const auto& op : cert.ops)
        v[op.j] = poly_add(R, v[op.j], poly_mul(R, op.lam, v[op.i]));
    for (size_t k = 0; k < v.size(); ++k) {
        if (!(v[k] == expected[k])) {
            return VerifyResult{false, "entry " + std::to_string(k + 1) + ": got " +
                                           poly_brief(v[k]) + ", expected " +
                                           poly_brief(expected[k])};
        }
    }
    return VerifyResult{true, ""};
}

VerifyResult verify_certificate(const ElemCert& cert, const Mat& start, const Mat& expected) {
    cert_validate(cert);
    if (start.n != cert.n || expected.n != cert.n)
        fail(Errc::MalformedCertificate, "matrix size does not match certificate");
    const RingCtx& R = cert.ambient.ring;
    Mat m = start;
    for (const auto& op : cert.ops)
        for (int r = 0; r < m.n; ++r)
            m.at(r, op.j) = poly_add(R, m.at(r, op.j), poly_mul(R, op.lam, m.at(r, op.i)));
    for (int r = 0; r < m.n; ++r)
        for (int c = 0; c < m.n; ++c)
            if (!(m.at(r, c) == expected.at(r, c)))
                return VerifyResult{false, "entry (" + std::to_string(r + 1) + "," +
                                               std::to_string(c + 1) + "): got " +
                                               poly_brief(m.at(r, c)) + ", expected " +
                                               poly_brief(expected.at(r, c))};
    return VerifyResult{true, ""};
}

static std::string poly_brief(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (size_t k = 0; k < f.coeffs.size(); ++k) {
        if (f.coeffs[k].num == 0) continue;
        if (!s.empty()) s += " + ";
        s += f.coeffs[k].num.get_str();
        if (f.coeffs[k].den != 1) s += "/" + f.coeffs[k].den.get_str();
        if (k >= 1) {
            s += "*";
            s += f.var;
            if (k >= 2) s += "^" + std::to_string(k);
        }
    }
    return s;
}

} // namespace reeslike
