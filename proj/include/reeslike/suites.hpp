#pragma once

#include <cstdint>

#include "reeslike/io.hpp"

namespace reeslike {

enum class SuiteKind { Square, Prop38, Prop39, PatchRow, PatchMatrix, Reduce, K1 };

SuiteKind suite_from_name(const std::string& name); // ParseError on unknown
const char* suite_name(SuiteKind kind);

struct SuiteResult {
    bool ok = false;
    std::string report; // deterministic: same inputs, same bytes
};

/// Runs one named property suite against a context with every random draw
/// taken from a single seeded generator. On failure the report carries a
/// counterexample minimized by dropping trailing coefficients and then
/// shrinking coefficient magnitudes.
SuiteResult run_suite(SuiteKind kind, const ReesCtx& ctx, uint64_t seed, long trials);

/// Counterexample minimizer used by the suites: repeatedly drops trailing
/// polynomial coefficients, then pulls coefficient magnitudes toward zero,
/// keeping `still_fails` true throughout.
using FailPred = std::function<bool(const std::vector<Poly>&)>;
std::vector<Poly> shrink_sample(const RingCtx& ring, std::vector<Poly> sample,
                                const FailPred& still_fails);

} // namespace reeslike
