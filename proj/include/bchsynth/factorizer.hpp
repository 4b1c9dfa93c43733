// Complete factorization of binary polynomials into irreducibles and
// enumeration of their monic divisors.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bchsynth/gf2poly.hpp"

namespace bchsynth {

// Irreducible factorization; bases are distinct and sorted by (degree, value),
// and prod base^multiplicity reconstructs the original polynomial.
struct Factorization {
    struct Term {
        Poly base;
        unsigned multiplicity = 0;
    };
    std::vector<Term> factors;

    Poly product() const;
};

// Rabin's test: X^(2^d) == X (mod p) for d = deg(p), and for every prime q | d
// the polynomial X^(2^(d/q)) + X is coprime with p. Throws on constant input.
bool is_irreducible(const Poly& p);

// Square-free parts with multiplicities, sorted by (degree, value). Handles
// the characteristic-2 branch where a vanishing derivative means the input is
// a perfect square. Requires degree >= 1.
std::vector<std::pair<Poly, unsigned>> square_free_decomposition(const Poly& p);

// Complete irreducible factorization via square-free decomposition, then
// distinct-degree and equal-degree splitting. Requires degree >= 1;
// deterministic (the equal-degree split seeds its generator from the input).
Factorization factor(const Poly& p);

inline constexpr std::size_t kDefaultDivisorCap = 4096;

struct DivisorList {
    std::vector<Poly> divisors;   // sorted by value; never contains 1
    bool truncated = false;
};

// All monic divisors except the constant 1. When the full count
// prod(multiplicity_i + 1) - 1 exceeds `cap`, returns only the original
// polynomial, each base, and each base at full multiplicity, flagged truncated.
DivisorList divisors(const Factorization& f, std::size_t cap = kDefaultDivisorCap);

}  // namespace bchsynth
