#pragma once

#include <optional>
#include <vector>

#include "reeslike/ring.hpp"

namespace reeslike {

/// Dense univariate polynomial. Coefficients ascend by degree with trailing
/// zeros trimmed; the zero polynomial is the empty list. `var` is a display
/// label ('t', 'u', 'x'); u stands for t^2 in the conductor-square corners.
struct Poly {
    std::vector<RingElem> coeffs;
    char var = 't';

    bool is_zero() const { return coeffs.empty(); }
    // degree of 0 is the minus-infinity marker kNegInf
    int degree() const { return coeffs.empty() ? kNegInf : static_cast<int>(coeffs.size()) - 1; }
    const RingElem& leading() const { return coeffs.back(); }
    const RingElem& coeff(size_t k, const RingElem& zero) const {
        return k < coeffs.size() ? coeffs[k] : zero;
    }

    static constexpr int kNegInf = -0x40000000;

    bool operator==(const Poly&) const = default;
};

Poly poly_zero(char var = 't');
Poly poly_const(const RingCtx& ring, const RingElem& c, char var = 't');
Poly poly_one(const RingCtx& ring, char var = 't');
Poly poly_monomial(const RingCtx& ring, const RingElem& c, size_t deg, char var = 't');
Poly poly_trim(Poly f);

Poly poly_add(const RingCtx& ring, const Poly& f, const Poly& g);
Poly poly_sub(const RingCtx& ring, const Poly& f, const Poly& g);
Poly poly_neg(const RingCtx& ring, const Poly& f);
Poly poly_mul(const RingCtx& ring, const Poly& f, const Poly& g);
Poly poly_scale(const RingCtx& ring, const RingElem& c, const Poly& f);
Poly poly_pow(const RingCtx& ring, const Poly& f, unsigned e);

struct PolyDivMod {
    Poly q, r;
};

// Euclidean division; requires the leading coefficient of g to be a unit.
PolyDivMod poly_divmod(const RingCtx& ring, const Poly& f, const Poly& g);

// Applies the coefficient map hom to every coefficient; out_var relabels.
Poly poly_coeff_map(const RingHom& hom, const Poly& f, char out_var);
inline Poly poly_coeff_map(const RingHom& hom, const Poly& f) { return poly_coeff_map(hom, f, f.var); }

bool poly_is_nilpotent(const RingCtx& ring, const Poly& f); // all coefficients nilpotent

// f is a unit of R[var] iff its constant term is a unit of R and every
// higher coefficient is nilpotent; the inverse comes from the geometric
// series of the nilpotent tail.
std::optional<Poly> poly_try_inv(const RingCtx& ring, const Poly& f);

} // namespace reeslike
