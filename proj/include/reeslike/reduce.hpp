#pragma once

#include <functional>

#include "reeslike/patch.hpp"

namespace reeslike {

/// Pluggable unimodular-row solvers keyed by ring capability. A solver takes
/// an ambient and a row and returns a certificate carrying the row to e1,
/// throwing NotUnimodular when no such certificate exists.
using RowSolver = std::function<ElemCert(const AlgebraRef&, const std::vector<Poly>&)>;

class SolverRegistry {
public:
    struct Entry {
        std::string name;
        std::function<bool(const AlgebraRef&)> matches;
        RowSolver solve;
    };

    static SolverRegistry& global();

    void add(std::string name, std::function<bool(const AlgebraRef&)> matches, RowSolver solve);
    const Entry* find(const AlgebraRef& amb) const;

private:
    std::vector<Entry> entries_;
};

/// Classical Euclidean engine over F[x], F a field: repeatedly divide by the
/// entry of minimal degree, then normalize the remaining unit.
ElemCert reduce_row_euclidean(const AlgebraRef& amb, std::vector<Poly> row);

/// Engine for artinian base rings (fields and Z/n), plain polynomial or
/// Rees-like ambient: CRT-split, reduce each factor modulo its nilradical to
/// a field, Euclidean-solve there, lift the certificate, clean up the
/// nilpotent discrepancy, and recombine via the CRT idempotents.
ElemCert reduce_row_artinian(const AlgebraRef& amb, std::vector<Poly> row);

struct StageLog {
    std::string stage;
    bool ok;
    std::string note;
};

struct ReductionReport {
    CertLevel status = CertLevel::Failed;
    std::optional<ElemCert> cert_A;
    std::optional<ElemCert> cert_corner1;
    std::optional<ElemCert> cert_corner2;
    std::optional<Mat> patched;     // pullback GL matrix over A
    std::optional<Mat> patched_inv;
    std::vector<Poly> final_row;
    std::vector<StageLog> log;
};

/// The patch-and-correct pipeline over A: solve both corners, align their
/// images over (R/a)[t] by certificate lifting, correct the nilpotent
/// discrepancy, patch the corner matrices, and attempt a full E(A)
/// certificate. Requires row length >= dim(R) + 2.
ReductionReport reduce_row_rees_patched(const ReesCtx& ctx, const std::vector<Poly>& row);

struct K1Result {
    Mat m;      // r x r representative
    Mat m_inv;
    ElemCert sigma1; // right factor
    ElemCert sigma2; // left factor: replay(sigma2) * M * replay(sigma1) = diag(m, I)
};

/// Size reduction of a K1 representative: peel one dimension at a time by
/// solving the last row and clearing the last column, for n > r >=
/// max{3, dim(R) + 2}.
K1Result k1_reduce(const AlgebraRef& amb, const Mat& m, const Mat& m_inv, int target);

std::vector<Poly> row_times_mat(const AlgebraRef& amb, const std::vector<Poly>& v, const Mat& m);

} // namespace reeslike
