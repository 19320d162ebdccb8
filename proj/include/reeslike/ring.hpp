#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "reeslike/error.hpp"

namespace reeslike {

using Int = mpz_class;

enum class RingTag { RationalField, PrimeField, Integers, ModularRing };

/// A ring element in canonical form. `den` is 1 except over the rationals,
/// where num/den is fully reduced with den > 0. Residues live in [0, n).
/// Equality is structural, which is why canonical form matters.
struct RingElem {
    Int num = 0;
    Int den = 1;

    bool operator==(const RingElem&) const = default;
};

/// Desk-scale base ring: Q, F_p, Z, or Z/n. Carries capability metadata
/// (dim, is_field, is_artinian) that the reduction engines key on. The zero
/// ring is represented internally as ModularRing(1); it arises from quotients
/// by the unit ideal and is never accepted from user input.
class RingCtx {
public:
    static RingCtx rationals();
    static RingCtx integers();
    static RingCtx prime_field(const Int& p); // checks primality
    static RingCtx modular(const Int& n);     // n >= 1; n == 1 is the zero ring

    // Canonical quotient of this ring by the principal ideal (m >= 0 lifted):
    // prime modulus gives a PrimeField, 1 gives the zero ring.
    RingCtx quotient_by(const Int& m) const;

    RingTag tag() const { return tag_; }
    const Int& modulus() const { return modulus_; } // PrimeField/ModularRing only
    int dim() const { return tag_ == RingTag::Integers ? 1 : 0; }
    bool is_field() const { return tag_ == RingTag::RationalField || tag_ == RingTag::PrimeField; }
    bool is_artinian() const { return tag_ != RingTag::Integers; }
    bool is_zero_ring() const { return tag_ == RingTag::ModularRing && modulus_ == 1; }

    bool operator==(const RingCtx& o) const { return tag_ == o.tag_ && modulus_ == o.modulus_; }

    // --- element construction -------------------------------------------
    RingElem canon(const Int& num, const Int& den = 1) const; // MalformedElement on den == 0
    RingElem zero() const { return canon(0); }
    RingElem one() const { return canon(1); }
    RingElem from_int(long v) const { return canon(Int(v)); }

    // --- exact arithmetic -----------------------------------------------
    RingElem add(const RingElem& a, const RingElem& b) const;
    RingElem sub(const RingElem& a, const RingElem& b) const;
    RingElem mul(const RingElem& a, const RingElem& b) const;
    RingElem neg(const RingElem& a) const;
    bool is_zero(const RingElem& a) const { return a.num == 0; }
    bool is_one(const RingElem& a) const;

    bool is_unit(const RingElem& a) const;
    RingElem inv_unit(const RingElem& a) const; // NotAUnit
    std::optional<RingElem> try_inv(const RingElem& a) const;
    bool is_nilpotent(const RingElem& a) const;

private:
    RingCtx(RingTag tag, Int modulus) : tag_(tag), modulus_(std::move(modulus)) {}

    RingTag tag_;
    Int modulus_; // 0 for Q and Z
};

bool int_is_prime(const Int& n);

/// Finitely generated ideal with a normalized single-generator form:
/// gcd generator over Z and Z/n, a zero-or-unit flag over fields. The
/// original generator list is retained for display.
class IdealFG {
public:
    IdealFG(RingCtx ring, std::vector<RingElem> gens);

    static IdealFG zero(const RingCtx& ring) { return IdealFG(ring, {}); }
    static IdealFG unit(const RingCtx& ring) { return IdealFG(ring, {ring.one()}); }
    static IdealFG principal(const RingCtx& ring, const RingElem& g) { return IdealFG(ring, {g}); }

    const RingCtx& ring() const { return ring_; }
    const std::vector<RingElem>& gens() const { return gens_; }
    const RingElem& normal_gen() const { return normal_; }

    bool contains(const RingElem& x) const;
    bool is_zero() const;
    bool is_unit() const;
    bool same_ideal(const IdealFG& o) const { return ring_ == o.ring_ && normal_ == o.normal_; }

    IdealFG intersect(const IdealFG& o) const;

    // The image ideal under a coefficient map into a quotient ring.
    IdealFG image_in(const RingCtx& cod) const;

private:
    RingCtx ring_;
    std::vector<RingElem> gens_;
    RingElem normal_;
};

/// One registered coefficient map: a quotient reduction R -> R/b or the
/// canonical lift back (representatives in [0, generator)).
class RingHom {
public:
    static RingHom identity(const RingCtx& r);
    static RingHom reduce_mod(const RingCtx& dom, const IdealFG& b); // cod = canonical quotient
    static RingHom lift_section(const RingCtx& quotient, const RingCtx& target);

    const RingCtx& dom() const { return dom_; }
    const RingCtx& cod() const { return cod_; }

    RingElem operator()(const RingElem& x) const;

private:
    enum class Kind { Identity, Reduce, Lift };
    RingHom(Kind k, RingCtx dom, RingCtx cod) : kind_(k), dom_(std::move(dom)), cod_(std::move(cod)) {}

    Kind kind_;
    RingCtx dom_, cod_;
};

/// One CRT factor of Z/n: the component ring Z/p^k together with both
/// directions of the isomorphism Z/n = prod Z/p^k.
struct CrtComponent {
    Int prime;
    unsigned exponent;
    RingCtx ring;       // Z/p^k (PrimeField when k == 1)
    RingElem idempotent; // element of Z/n: 1 in this factor, 0 elsewhere
};

struct ArtinianSplit {
    RingCtx source; // Z/n
    std::vector<CrtComponent> components;

    std::vector<RingElem> forward(const RingElem& x) const;   // componentwise reduction
    RingElem combine(const std::vector<RingElem>& parts) const; // CRT inverse
};

ArtinianSplit artinian_split(const RingCtx& ring); // requires ModularRing

IdealFG nilradical(const RingCtx& ring);

std::vector<std::pair<Int, unsigned>> factorize(Int n); // n >= 1, ascending primes

} // namespace reeslike
