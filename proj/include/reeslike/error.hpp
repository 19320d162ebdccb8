#pragma once

#include <stdexcept>
#include <string>

namespace reeslike {

// Every failure the library can signal carries one of these codes.
enum class Errc {
    MalformedElement,
    NonUnitLeadingCoeff,
    UnsupportedQuotient,
    UnsupportedRing,
    ClosureViolation,
    ImageMismatch,
    NotAUnit,
    DualMismatch,
    DeterminantMismatch,
    PreconditionFailed,
    MalformedCertificate,
    NotUnimodular,
    BoundViolation,
    NoCornerSolver,
    NoRowSolver,
    ParseError,
    Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace reeslike
