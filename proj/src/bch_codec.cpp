#include "bchsynth/bch_codec.hpp"

#include <set>
#include <stdexcept>

#include "bchsynth/rng.hpp"

namespace bchsynth {

CodeSpec build_generator(unsigned m, unsigned t)
{
    if (t < 1)
        throw std::invalid_argument("bch: t must be at least 1");
    if (m >= 32 || t >= (1u << (m - 1)))
        throw std::invalid_argument("bch: t must satisfy t < 2^(m-1)");

    CodeSpec spec;
    spec.field = build_field(m);   // throws for m outside [3, 16]
    spec.m = m;
    spec.n = spec.field.n();

    const auto cosets = cyclotomic_cosets(spec.field);
    std::set<unsigned> chosen;   // representatives of cosets covering 1..2t
    Poly g = Poly::one();
    for (unsigned exponent = 1; exponent <= 2 * t; exponent += 2) {
        for (const auto& coset : cosets) {
            if (std::find(coset.members.begin(), coset.members.end(), exponent % spec.n) ==
                coset.members.end())
                continue;
            if (chosen.insert(coset.representative).second)
                g = g * minimal_polynomial(spec.field, coset);
            break;
        }
    }

    const int deg = g.degree();
    if (deg < 0 || static_cast<unsigned>(deg) >= spec.n)
        throw std::invalid_argument("bch: no information digits left for these parameters");
    spec.g = g;
    spec.k = spec.n - static_cast<unsigned>(deg);
    spec.t = t;
    return spec;
}

BitVec encode(const CodeSpec& spec, const BitVec& message)
{
    if (message.size() != spec.k)
        throw std::invalid_argument("bch: message must have exactly k bits");
    const Poly u = Poly::from_bits(message);
    const Poly shifted = u.shifted_left(spec.n - spec.k);
    const Poly parity = shifted % spec.g;
    return (parity + shifted).to_bits(spec.n);
}

TestVectorSet generate_test_vectors(const CodeSpec& spec, std::size_t count, std::uint32_t seed)
{
    if (spec.k <= 62 && count > (std::uint64_t{1} << spec.k) - 1)
        throw std::invalid_argument("bch: not enough distinct nonzero messages");

    TestVectorSet set;
    set.spec = spec;
    set.seed = seed;
    set.ber = 0.0;

    Rng rng(seed);
    std::set<Poly> seen;
    while (set.codewords.size() < count) {
        BitVec message(spec.k, 0);
        for (unsigned i = 0; i < spec.k; i += 32) {
            std::uint32_t w = rng.next_u32();
            for (unsigned b = 0; b < 32 && i + b < spec.k; ++b)
                message[i + b] = (w >> b) & 1;
        }
        const Poly u = Poly::from_bits(message);
        if (u.is_zero() || !seen.insert(u).second)
            continue;
        set.codewords.push_back(encode(spec, message));
    }
    return set;
}

TestVectorSet inject_noise(const TestVectorSet& vectors, double ber, std::uint32_t seed)
{
    if (ber < 0.0 || ber > 1.0)
        throw std::invalid_argument("bch: bit-error rate must lie in [0, 1]");
    TestVectorSet out = vectors;
    out.ber = ber;
    Rng rng(seed);
    for (BitVec& word : out.codewords)
        for (auto& bit : word)
            if (rng.bernoulli(ber))
                bit ^= 1;
    return out;
}

}  // namespace bchsynth
