#include "reeslike/ring.hpp"

#include <algorithm>

namespace reeslike {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::MalformedElement: return "MalformedElement";
        case Errc::NonUnitLeadingCoeff: return "NonUnitLeadingCoeff";
        case Errc::UnsupportedQuotient: return "UnsupportedQuotient";
        case Errc::UnsupportedRing: return "UnsupportedRing";
        case Errc::ClosureViolation: return "ClosureViolation";
        case Errc::ImageMismatch: return "ImageMismatch";
        case Errc::NotAUnit: return "NotAUnit";
        case Errc::DualMismatch: return "DualMismatch";
        case Errc::DeterminantMismatch: return "DeterminantMismatch";
        case Errc::PreconditionFailed: return "PreconditionFailed";
        case Errc::MalformedCertificate: return "MalformedCertificate";
        case Errc::NotUnimodular: return "NotUnimodular";
        case Errc::BoundViolation: return "BoundViolation";
        case Errc::NoCornerSolver: return "NoCornerSolver";
        case Errc::NoRowSolver: return "NoRowSolver";
        case Errc::ParseError: return "ParseError";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

bool int_is_prime(const Int& n) {
    if (n < 2) return false;
    // 40 Miller-Rabin rounds on top of GMP's trial division; deterministic
    // enough for desk-scale moduli, and we only ever feed it user input.
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
    if (n < 1) fail(Errc::PreconditionFailed, "factorize expects n >= 1");
    std::vector<std::pair<Int, unsigned>> out;
    Int p = 2;
    while (p * p <= n) {
        if (n % p == 0) {
            unsigned k = 0;
            while (n % p == 0) { n /= p; ++k; }
            out.emplace_back(p, k);
        }
        if (p == 2) p = 3;
        else p += 2;
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// ---------------------------------------------------------------------------
// RingCtx
// ---------------------------------------------------------------------------

RingCtx RingCtx::rationals() { return RingCtx(RingTag::RationalField, 0); }
RingCtx RingCtx::integers() { return RingCtx(RingTag::Integers, 0); }

RingCtx RingCtx::prime_field(const Int& p) {
    if (!int_is_prime(p)) fail(Errc::MalformedElement, "Fp modulus " + p.get_str() + " is not prime");
    return RingCtx(RingTag::PrimeField, p);
}

RingCtx RingCtx::modular(const Int& n) {
    if (n < 1) fail(Errc::MalformedElement, "Zn modulus must be >= 1");
    return RingCtx(RingTag::ModularRing, n);
}

RingCtx RingCtx::quotient_by(const Int& m) const {
    Int mm = abs(m);
    switch (tag_) {
        case RingTag::Integers:
            if (mm == 0) return *this;
            if (mm == 1) return modular(1);
            return int_is_prime(mm) ? prime_field(mm) : modular(mm);
        case RingTag::ModularRing: {
            if (is_zero_ring()) return *this;
            Int d = mm == 0 ? modulus_ : gcd(mm, modulus_);
            if (d == modulus_) return *this;
            if (d == 1) return modular(1);
            return int_is_prime(d) ? prime_field(d) : modular(d);
        }
        case RingTag::RationalField:
        case RingTag::PrimeField:
            // Ideals of a field are (0) or (1).
            if (mm == 0) return *this;
            return modular(1);
    }
    fail(Errc::Internal, "unreachable");
}

RingElem RingCtx::canon(const Int& num, const Int& den) const {
    if (den == 0) fail(Errc::MalformedElement, "zero denominator");
    switch (tag_) {
        case RingTag::RationalField: {
            Int n = num, d = den;
            if (d < 0) { n = -n; d = -d; }
            Int g = gcd(abs(n), d);
            if (g > 1) { n /= g; d /= g; }
            if (n == 0) d = 1;
            return RingElem{n, d};
        }
        case RingTag::Integers:
            if (den != 1 && num % den != 0)
                fail(Errc::MalformedElement, "non-integral value over Z");
            return RingElem{num / den, 1};
        case RingTag::PrimeField:
        case RingTag::ModularRing: {
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), modulus_.get_mpz_t());
            if (den != 1) {
                Int dr;
                mpz_fdiv_r(dr.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t());
                RingElem inv = inv_unit(RingElem{dr, 1});
                mpz_fdiv_r(r.get_mpz_t(), Int(r * inv.num).get_mpz_t(), modulus_.get_mpz_t());
            }
            return RingElem{r, 1};
        }
    }
    fail(Errc::Internal, "unreachable");
}

RingElem RingCtx::add(const RingElem& a, const RingElem& b) const {
    if (tag_ == RingTag::RationalField) return canon(a.num * b.den + b.num * a.den, a.den * b.den);
    return canon(a.num + b.num);
}

RingElem RingCtx::sub(const RingElem& a, const RingElem& b) const {
    if (tag_ == RingTag::RationalField) return canon(a.num * b.den - b.num * a.den, a.den * b.den);
    return canon(a.num - b.num);
}

RingElem RingCtx::mul(const RingElem& a, const RingElem& b) const {
    if (tag_ == RingTag::RationalField) return canon(a.num * b.num, a.den * b.den);
    return canon(a.num * b.num);
}

RingElem RingCtx::neg(const RingElem& a) const {
    if (tag_ == RingTag::RationalField) return RingElem{-a.num, a.den};
    return canon(-a.num);
}

bool RingCtx::is_one(const RingElem& a) const {
    if (is_zero_ring()) return true; // 1 == 0 in the zero ring
    return a.num == 1 && a.den == 1;
}

bool RingCtx::is_unit(const RingElem& a) const {
    switch (tag_) {
        case RingTag::RationalField: return a.num != 0;
        case RingTag::Integers: return a.num == 1 || a.num == -1;
        case RingTag::PrimeField: return a.num != 0;
        case RingTag::ModularRing:
            if (is_zero_ring()) return true;
            return gcd(a.num, modulus_) == 1;
    }
    return false;
}

std::optional<RingElem> RingCtx::try_inv(const RingElem& a) const {
    switch (tag_) {
        case RingTag::RationalField:
            if (a.num == 0) return std::nullopt;
            return canon(a.den, a.num);
        case RingTag::Integers:
            if (a.num == 1 || a.num == -1) return a;
            return std::nullopt;
        case RingTag::PrimeField:
        case RingTag::ModularRing: {
            if (is_zero_ring()) return RingElem{0, 1};
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.num.get_mpz_t(),
                       modulus_.get_mpz_t());
            if (g != 1) return std::nullopt;
            return canon(s);
        }
    }
    return std::nullopt;
}

RingElem RingCtx::inv_unit(const RingElem& a) const {
    auto inv = try_inv(a);
    if (!inv) fail(Errc::NotAUnit, "element is not a unit");
    return *inv;
}

bool RingCtx::is_nilpotent(const RingElem& a) const {
    switch (tag_) {
        case RingTag::RationalField:
        case RingTag::PrimeField:
        case RingTag::Integers:
            return a.num == 0;
        case RingTag::ModularRing: {
            if (is_zero_ring()) return true;
            // x nilpotent in Z/n iff rad(n) | x.
            Int rad = 1;
            for (const auto& [p, k] : factorize(modulus_)) rad *= p;
            return a.num % rad == 0;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// IdealFG
// ---------------------------------------------------------------------------

IdealFG::IdealFG(RingCtx ring, std::vector<RingElem> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), normal_(ring_.zero()) {
    switch (ring_.tag()) {
        case RingTag::Integers: {
            Int g = 0;
            for (const auto& e : gens_) g = gcd(g, e.num);
            normal_ = RingElem{abs(g), 1};
            break;
        }
        case RingTag::PrimeField:
        case RingTag::ModularRing: {
            Int g = ring_.modulus();
            for (const auto& e : gens_) g = gcd(g, e.num);
            normal_ = ring_.canon(g); // g == n collapses to 0
            break;
        }
        case RingTag::RationalField: {
            bool any = std::any_of(gens_.begin(), gens_.end(),
                                   [](const RingElem& e) { return e.num != 0; });
            normal_ = any ? ring_.one() : ring_.zero();
            break;
        }
    }
}

bool IdealFG::contains(const RingElem& x) const {
    if (ring_.is_zero_ring()) return true;
    if (x.num == 0) return true;
    switch (ring_.tag()) {
        case RingTag::RationalField:
            return normal_.num == 1;
        case RingTag::PrimeField:
            return normal_.num != 0;
        case RingTag::Integers:
            if (normal_.num == 0) return false;
            return x.num % normal_.num == 0;
        case RingTag::ModularRing: {
            // Ideal (g) with g | n in normal form; x in (g) iff g | lift(x).
            if (normal_.num == 0) return false;
            Int d = gcd(normal_.num, ring_.modulus());
            return x.num % d == 0;
        }
    }
    return false;
}

bool IdealFG::is_zero() const { return !ring_.is_zero_ring() && normal_.num == 0; }

bool IdealFG::is_unit() const {
    if (ring_.is_zero_ring()) return true;
    if (ring_.is_field()) return normal_.num != 0;
    return normal_.num == 1;
}

IdealFG IdealFG::intersect(const IdealFG& o) const {
    if (!(ring_ == o.ring_)) fail(Errc::PreconditionFailed, "ideal_intersect: rings differ");
    switch (ring_.tag()) {
        case RingTag::Integers: {
            if (normal_.num == 0 || o.normal_.num == 0) return IdealFG::zero(ring_);
            return IdealFG::principal(ring_, RingElem{lcm(normal_.num, o.normal_.num), 1});
        }
        case RingTag::PrimeField:
        case RingTag::RationalField:
            return (is_unit() && o.is_unit()) ? IdealFG::unit(ring_) : IdealFG::zero(ring_);
        case RingTag::ModularRing: {
            if (ring_.is_zero_ring()) return *this;
            const Int& n = ring_.modulus();
            Int d1 = normal_.num == 0 ? n : normal_.num;
            Int d2 = o.normal_.num == 0 ? n : o.normal_.num;
            Int l = lcm(d1, d2);
            return IdealFG::principal(ring_, ring_.canon(l));
        }
    }
    fail(Errc::Internal, "unreachable");
}

IdealFG IdealFG::image_in(const RingCtx& cod) const {
    std::vector<RingElem> im;
    im.reserve(gens_.size());
    for (const auto& g : gens_) im.push_back(cod.canon(g.num, g.den));
    return IdealFG(cod, std::move(im));
}

// ---------------------------------------------------------------------------
// RingHom
// ---------------------------------------------------------------------------

RingHom RingHom::identity(const RingCtx& r) { return RingHom(Kind::Identity, r, r); }

RingHom RingHom::reduce_mod(const RingCtx& dom, const IdealFG& b) {
    if (!(b.ring() == dom)) fail(Errc::PreconditionFailed, "reduce_mod: ideal over wrong ring");
    RingCtx cod = dom.quotient_by(b.normal_gen().num);
    if (cod == dom) return identity(dom);
    return RingHom(Kind::Reduce, dom, cod);
}

RingHom RingHom::lift_section(const RingCtx& quotient, const RingCtx& target) {
    if (quotient == target) return identity(target);
    if (quotient.is_zero_ring()) return RingHom(Kind::Lift, quotient, target);
    bool ok = false;
    if (quotient.tag() == RingTag::PrimeField || quotient.tag() == RingTag::ModularRing) {
        if (target.tag() == RingTag::Integers) ok = true;
        if ((target.tag() == RingTag::ModularRing || target.tag() == RingTag::PrimeField) &&
            target.modulus() % quotient.modulus() == 0)
            ok = true;
    }
    if (!ok) fail(Errc::UnsupportedQuotient, "no canonical lift between these rings");
    return RingHom(Kind::Lift, quotient, target);
}

RingElem RingHom::operator()(const RingElem& x) const {
    switch (kind_) {
        case Kind::Identity: return x;
        case Kind::Reduce: return cod_.canon(x.num, x.den);
        case Kind::Lift:
            // Canonical representative in [0, modulus) is exactly the stored value.
            return cod_.canon(x.num);
    }
    fail(Errc::Internal, "unreachable");
}

// ---------------------------------------------------------------------------
// CRT split and nilradical
// ---------------------------------------------------------------------------

ArtinianSplit artinian_split(const RingCtx& ring) {
    if (ring.tag() != RingTag::ModularRing && ring.tag() != RingTag::PrimeField)
        fail(Errc::UnsupportedRing, "artinian_split expects Z/n");
    ArtinianSplit out{ring, {}};
    if (ring.is_zero_ring()) return out;
    const Int& n = ring.modulus();
    for (const auto& [p, k] : factorize(n)) {
        Int q;
        mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), k);
        RingCtx comp = (k == 1) ? RingCtx::prime_field(p) : RingCtx::modular(q);
        Int rest = n / q;
        // idempotent: 1 mod q, 0 mod n/q
        Int e = 0;
        if (rest == 1) {
            e = 1;
        } else {
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), rest.get_mpz_t(),
                       q.get_mpz_t());
            // s*rest ≡ 1 (mod q) and ≡ 0 (mod rest)
            e = s * rest;
        }
        out.components.push_back(CrtComponent{p, k, comp, ring.canon(e)});
    }
    return out;
}

std::vector<RingElem> ArtinianSplit::forward(const RingElem& x) const {
    std::vector<RingElem> parts;
    parts.reserve(components.size());
    for (const auto& c : components) parts.push_back(c.ring.canon(x.num));
    return parts;
}

RingElem ArtinianSplit::combine(const std::vector<RingElem>& parts) const {
    if (parts.size() != components.size())
        fail(Errc::PreconditionFailed, "CRT combine: wrong component count");
    RingElem acc = source.zero();
    for (size_t i = 0; i < parts.size(); ++i)
        acc = source.add(acc, source.mul(components[i].idempotent, source.canon(parts[i].num)));
    return acc;
}

IdealFG nilradical(const RingCtx& ring) {
    switch (ring.tag()) {
        case RingTag::RationalField:
        case RingTag::PrimeField:
        case RingTag::Integers:
            return IdealFG::zero(ring);
        case RingTag::ModularRing: {
            if (ring.is_zero_ring()) return IdealFG::zero(ring);
            Int rad = 1;
            for (const auto& [p, k] : factorize(ring.modulus())) rad *= p;
            return IdealFG::principal(ring, ring.canon(rad));
        }
    }
    fail(Errc::Internal, "unreachable");
}

} // namespace reeslike
