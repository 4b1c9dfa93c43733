// Binary primitive BCH code construction and systematic encoding; the
// ground-truth source for test bitstreams.
#pragma once

#include <cstdint>
#include <vector>

#include "bchsynth/gf2m_field.hpp"
#include "bchsynth/gf2poly.hpp"

namespace bchsynth {

// A fully specified (n, k, t) BCH code over GF(2^m): g divides X^n + 1 and
// deg(g) = n - k <= m*t.
struct CodeSpec {
    unsigned m = 0;
    unsigned n = 0;
    unsigned k = 0;
    unsigned t = 0;
    Poly g;
    FieldCtx field;
};

struct TestVectorSet {
    CodeSpec spec;
    std::vector<BitVec> codewords;   // n-bit blocks, constant term first
    std::uint32_t seed = 0;
    double ber = 0.0;                // applied bit-error rate, 0 for clean
};

// Generator as the product of the distinct minimal polynomials covering the
// root exponents 1..2t (equivalently the odd exponents 1, 3, ..., 2t-1, since
// even powers share the coset of a preceding odd one). Throws when m is out of
// range, t >= 2^(m-1), or the resulting k would fall below 1.
CodeSpec build_generator(unsigned m, unsigned t);

// Systematic encoding: v(X) = b(X) + X^(n-k) u(X) with b the remainder of
// X^(n-k) u(X) by g(X). Parity digits occupy positions 0..n-k-1 of the output
// block, message digits the rest. Message must be exactly k bits.
BitVec encode(const CodeSpec& spec, const BitVec& message);

// `count` pairwise-distinct nonzero messages drawn with the seeded generator,
// each encoded. Deterministic for a fixed seed, and a longer run extends a
// shorter one with the same seed. Throws when count exceeds the number of
// distinct nonzero messages.
TestVectorSet generate_test_vectors(const CodeSpec& spec, std::size_t count, std::uint32_t seed);

// Flips each bit independently with probability `ber` (one draw per bit, in
// codeword order). Records ber in the returned set.
TestVectorSet inject_noise(const TestVectorSet& vectors, double ber, std::uint32_t seed);

}  // namespace bchsynth
