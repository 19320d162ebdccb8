#pragma once

#include "reeslike/cert.hpp"

namespace reeslike {

/// The conductor square presenting A = R[at, t^2] as the fiber product of
/// R[t] and (R/a)[t^2] over (R/a)[t]:
///
///        A --i1--> R[t]
///        |           |
///      eta1        eta2
///        v           v
///   (R/a)[u] --i2--> (R/a)[t]        (u stands for t^2)
///
/// i1 is the inclusion, eta2 is coefficientwise reduction mod a, eta1 kills
/// the odd part (it lies in a) and reduces the even part, i2 doubles degrees.
/// eta2 ∘ i1 = i2 ∘ eta1 on every element, and ker(eta1) = a* = aR[t] ∩ A.
class ConductorSquare {
public:
    explicit ConductorSquare(ReesCtx ctx);

    const ReesCtx& ctx() const { return ctx_; }
    const AlgebraRef& algebra() const { return algebra_; }      // A
    const AlgebraRef& corner_rt() const { return corner_rt_; }  // R[t]
    const AlgebraRef& corner_qu() const { return corner_qu_; }  // (R/a)[u]
    const AlgebraRef& corner_qt() const { return corner_qt_; }  // (R/a)[t]
    const RingHom& mod_a() const { return mod_a_; }
    const RingHom& lift_a() const { return lift_a_; }

    Poly i1(const Poly& f) const;   // A elem (validated) -> R[t]
    Poly eta1(const Poly& f) const; // A elem -> (R/a)[u]
    Poly i2(const Poly& g) const;   // (R/a)[u] -> (R/a)[t]
    Poly eta2(const Poly& f) const; // R[t] -> (R/a)[t]

    // canonical sections used by certificate lifting
    Poly lift_eta1(const Poly& g) const; // (R/a)[u] -> A, even degrees, odd = 0
    Poly lift_eta2(const Poly& h) const; // (R/a)[t] -> R[t], coefficientwise

private:
    ReesCtx ctx_;
    RingHom mod_a_, lift_a_;
    AlgebraRef algebra_, corner_rt_, corner_qu_, corner_qt_;
};

/// Pullback of a matched corner pair: (f over R[t], g over (R/a)[u]) with
/// eta2(f) = i2(g) determines the unique h in A with i1(h) = f, eta1(h) = g.
ReesElem patch_element(const Poly& f, const Poly& g, const ConductorSquare& sq);

struct PatchedUnit {
    ReesElem value;
    ReesElem inverse;
};

PatchedUnit patch_unit(const Poly& u1, const Poly& u1_inv, const Poly& u2, const Poly& u2_inv,
                       const ConductorSquare& sq);

UmRow patch_row(const UmRow& r1, const UmRow& r2, const ConductorSquare& sq);

enum class PatchMode { GL, SL, E };
enum class CertLevel { FullyElementary, CornerCertified, Failed };

const char* cert_level_name(CertLevel level);

struct PatchedMatrix {
    Mat m;      // over A, with parity-checked entries
    Mat m_inv;  // verified: m * m_inv == I
    CertLevel level = CertLevel::CornerCertified; // meaningful in mode E
    std::optional<ElemCert> cert_A;               // present iff FullyElementary
};

/// Entrywise patching of invertible corner matrices. Mode SL additionally
/// verifies det == 1 on both corners and on the pullback; mode E takes both
/// corner certificates and attempts to certify the patched matrix as a
/// product of elementary matrices over A itself, which is constructive
/// exactly when ker(eta1) is zero or nilpotent.
PatchedMatrix patch_matrix(const Mat& m1, const Mat& m1_inv, const Mat& m2, const Mat& m2_inv,
                           const ConductorSquare& sq, PatchMode mode,
                           const ElemCert* cert1 = nullptr, const ElemCert* cert2 = nullptr);

enum class LiftAlong { Eta1, Eta2 };

/// Lifts each generator e_{ij}(lam_bar) through the chosen surjection by the
/// canonical coefficient section. Lifting along eta1 places coefficients at
/// even t-degrees, so the result is always a valid A-certificate.
ElemCert lift_E_certificate(const ElemCert& cert, const ConductorSquare& sq, LiftAlong along);

/// Registered mod-b lift: certificate over a quotient-coefficient ring pulled
/// back coefficientwise to the target ambient.
ElemCert lift_E_certificate_mod(const ElemCert& cert, const AlgebraRef& target);

/// Factors a matrix D == I mod nilpotent coefficients with det(D) = 1 into
/// elementary operations: Gaussian sweep on unit pivots, then Whitehead
/// factorization of the leftover diagonal.
ElemCert factor_one_plus_nilpotent(const AlgebraRef& amb, const Mat& d);

} // namespace reeslike
