#pragma once

#include <utility>
#include <vector>

#include "reeslike/poly.hpp"

namespace reeslike {

/// The Rees-like algebra A = R[at, t^2] = R + at + Rt^2 + at^3 + ...
/// dim_A is carried as metadata (= dim R + 1), never computed.
struct ReesCtx {
    RingCtx ring;
    IdealFG a;
    int dim_A;
    bool a_is_zero;
    bool a_is_unit;

    static ReesCtx make(RingCtx ring, IdealFG a);

    bool operator==(const ReesCtx& o) const {
        return ring == o.ring && a.same_ideal(o.a);
    }
};

/// An element of A: a t-polynomial over R whose odd-degree coefficients lie
/// in the ideal a. The invariant is validated at construction and after
/// every arithmetic call.
struct ReesElem {
    ReesCtx ctx;
    Poly poly;
};

bool rees_membership(const ReesCtx& ctx, const Poly& f);

// Validating constructor; MalformedElement if the parity invariant fails.
ReesElem rees_element(const ReesCtx& ctx, Poly f);

// Arithmetic with re-validation; a closure failure is an internal bug.
ReesElem rees_add(const ReesElem& f, const ReesElem& g);
ReesElem rees_mul(const ReesElem& f, const ReesElem& g);

/// Image of f in (R/b)[a_bar t, t^2] under coefficientwise reduction mod b,
/// where a_bar is the image ideal of a.
struct ReesQuotientImage {
    ReesCtx ctx;      // the quotient context
    ReesElem value;   // image of the input
    RingHom hom;      // the coefficient map R -> R/b
};

ReesQuotientImage quotient_image(const ReesElem& f, const IdealFG& b);

// f nilpotent iff every coefficient lies in nil(R) (odd ones then lie in
// nil(a) = a ∩ nil(R) automatically).
bool rees_is_nilpotent(const ReesElem& f);

// f in b* = bR[t] ∩ A iff every coefficient of f lies in b.
bool star_membership(const ReesElem& f, const IdealFG& b);

// Minimal primary decomposition of b* over R = Z: factors the gcd generator.
std::vector<std::pair<Int, IdealFG>> star_primary_components(const IdealFG& b);

// Membership of f/s^k in S^{-1}A for S = {s^m}: decided by saturation.
// Over Z this asks whether some power of s moves every odd coefficient
// into a; k only changes the element by a unit of S^{-1}R.
bool localized_membership(const ReesCtx& ctx, const Poly& f, const RingElem& s, unsigned k);

} // namespace reeslike
