// GF(2^m) construction, cyclotomic cosets, minimal polynomials and the
// designed-distance bound derived from consecutive roots.
#pragma once

#include <cstdint>
#include <vector>

#include "bchsynth/gf2poly.hpp"

namespace bchsynth {

// Constructed extension field GF(2^m) with exp/log tables over the
// multiplicative group of order n = 2^m - 1. Immutable after construction.
class FieldCtx {
public:
    unsigned m() const { return m_; }
    unsigned n() const { return n_; }
    const Poly& prim_poly() const { return prim_poly_; }

    // alpha^i for i in 0..n-1, as an m-bit element mask
    std::uint32_t exp(unsigned i) const { return exp_[i % n_]; }
    // discrete log of a nonzero element
    unsigned log(std::uint32_t element) const { return log_[element]; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
    {
        if (a == 0 || b == 0)
            return 0;
        return exp_[(log_[a] + log_[b]) % n_];
    }

    // p(alpha^i) by Horner evaluation over the element tables
    std::uint32_t eval_at_alpha_pow(const Poly& p, unsigned i) const;

private:
    friend FieldCtx build_field(unsigned m);
    friend FieldCtx build_field(unsigned m, const Poly& prim_poly);

    unsigned m_ = 0;
    unsigned n_ = 0;
    Poly prim_poly_;
    std::vector<std::uint32_t> exp_;
    std::vector<unsigned> log_;
};

// Exponent set {r, 2r, 4r, ...} mod n; the minimal polynomial of alpha^r has
// exactly these exponents as its root set.
struct CyclotomicCoset {
    unsigned representative = 0;       // smallest member
    std::vector<unsigned> members;     // sorted ascending
};

// Builds GF(2^m) for 3 <= m <= 16. The polynomial is verified to be primitive
// by cycling alpha through all 2^m - 1 nonzero elements; a reducible or
// non-primitive input throws std::invalid_argument.
FieldCtx build_field(unsigned m, const Poly& prim_poly);
FieldCtx build_field(unsigned m);   // default primitive polynomial per m

// Partition of {1..n-1} into doubling-closed cosets, sorted by representative.
std::vector<CyclotomicCoset> cyclotomic_cosets(const FieldCtx& ctx);

// Product of (X + alpha^j) over the coset, collapsed to GF(2) coefficients.
// Irreducible of degree = coset size.
Poly minimal_polynomial(const FieldCtx& ctx, const CyclotomicCoset& coset);

// {i in 0..n-1 : p(alpha^i) = 0} by exhaustive evaluation; p must be nonzero.
std::vector<unsigned> roots_of(const FieldCtx& ctx, const Poly& p);

struct DistanceEstimate {
    unsigned d = 0;   // designed-distance lower bound
    unsigned t = 0;   // error-correcting capability floor((d-1)/2)
};

// Longest consecutive root run alpha^1..alpha^delta gives d = delta + 1.
// Requires g | X^n + 1; throws std::invalid_argument otherwise.
DistanceEstimate designed_distance(const FieldCtx& ctx, const Poly& g);

}  // namespace bchsynth
