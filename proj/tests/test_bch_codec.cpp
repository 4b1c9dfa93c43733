#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "bchsynth/bch_codec.hpp"
#include "bchsynth/stream_io.hpp"

using namespace bchsynth;

namespace {

BitVec bits(const char* s)
{
    return bits_from_ascii(s);
}

}  // namespace

TEST_SUITE("bch_codec")
{
    TEST_CASE("generator synthesis reproduces the standard (31,k,t) family")
    {
        const CodeSpec c1 = build_generator(5, 1);
        CHECK(c1.g == Poly::parse_octal("45"));
        CHECK(c1.n == 31);
        CHECK(c1.k == 26);

        const CodeSpec c2 = build_generator(5, 2);
        CHECK(c2.g == Poly::parse_octal("3551"));
        CHECK(c2.k == 21);

        const CodeSpec c3 = build_generator(5, 3);
        CHECK(c3.g == Poly::parse_octal("107657"));
        CHECK(c3.k == 16);

        const CodeSpec c5 = build_generator(5, 5);
        CHECK(c5.g == Poly::parse_octal("5423325"));
        CHECK(c5.k == 11);

        const CodeSpec hamming = build_generator(3, 1);
        CHECK(hamming.g == Poly::from_value(0xB));
        CHECK(hamming.n == 7);
        CHECK(hamming.k == 4);
    }

    TEST_CASE("generator parameter limits")
    {
        CHECK_THROWS_AS(build_generator(5, 16), std::invalid_argument);   // t >= 2^(m-1)
        CHECK_THROWS_AS(build_generator(2, 1), std::invalid_argument);
        CHECK_THROWS_AS(build_generator(17, 1), std::invalid_argument);
        CHECK_THROWS_AS(build_generator(5, 0), std::invalid_argument);
        // the full-coset boundary case is the (7,1,3) repetition code
        const CodeSpec rep = build_generator(3, 3);
        CHECK(rep.k == 1);
        CHECK(rep.g == (Poly::monomial(7) + Poly::one()) / Poly::from_value(0x3));
        // large t saturates at k = 1 once every coset is consumed
        CHECK(build_generator(5, 8).k == 1);
    }

    TEST_CASE("odd-exponent generator equals the full 1..2t product")
    {
        for (unsigned m = 3; m <= 6; ++m) {
            const FieldCtx ctx = build_field(m);
            const auto cosets = cyclotomic_cosets(ctx);
            for (unsigned t = 1; t < (1u << (m - 1)); ++t) {
                CodeSpec spec;
                try {
                    spec = build_generator(m, t);
                } catch (const std::invalid_argument&) {
                    continue;   // k < 1 for this t
                }
                // direct product over cosets touching any exponent in 1..2t
                Poly expected = Poly::one();
                for (const auto& coset : cosets) {
                    bool touched = false;
                    for (unsigned e = 1; e <= 2 * t && !touched; ++e)
                        touched = std::find(coset.members.begin(), coset.members.end(), e) !=
                                  coset.members.end();
                    if (touched)
                        expected = expected * minimal_polynomial(ctx, coset);
                }
                CHECK(spec.g == expected);
            }
        }
    }

    TEST_CASE("every generator divides X^n + 1 and meets its designed distance")
    {
        for (unsigned m = 3; m <= 6; ++m) {
            for (unsigned t = 1; t < (1u << (m - 1)); ++t) {
                CodeSpec spec;
                try {
                    spec = build_generator(m, t);
                } catch (const std::invalid_argument&) {
                    continue;
                }
                const Poly xn1 = Poly::monomial(spec.n) + Poly::one();
                CHECK((xn1 % spec.g).is_zero());
                CHECK(spec.k == spec.n - static_cast<unsigned>(spec.g.degree()));
                const DistanceEstimate est = designed_distance(spec.field, spec.g);
                CHECK(est.t >= t);
            }
        }
        // the designed distance is exact for the four (31,k,t) reference codes
        for (unsigned t : {1u, 2u, 3u, 5u}) {
            const CodeSpec spec = build_generator(5, t);
            CHECK(designed_distance(spec.field, spec.g).t == t);
        }
    }

    TEST_CASE("systematic encoding reproduces the (7,4) codeword table")
    {
        const CodeSpec spec = build_generator(3, 1);
        CHECK(encode(spec, bits("1000")) == bits("1101000"));
        CHECK(encode(spec, bits("1010")) == bits("0011010"));
        CHECK(encode(spec, bits("0110")) == bits("1000110"));
        CHECK(encode(spec, bits("1110")) == bits("0101110"));
        CHECK(encode(spec, bits("1001")) == bits("0111001"));
        CHECK(encode(spec, bits("0111")) == bits("0010111"));

        CHECK(encode(spec, bits("0000")) == bits("0000000"));
        CHECK_THROWS_AS(encode(spec, bits("10000")), std::invalid_argument);
    }

    TEST_CASE("encoded blocks are divisible by the generator")
    {
        const CodeSpec spec = build_generator(5, 2);
        const TestVectorSet set = generate_test_vectors(spec, 40, 9);
        for (const BitVec& word : set.codewords) {
            REQUIRE(word.size() == spec.n);
            CHECK((Poly::from_bits(word) % spec.g).is_zero());
        }
    }

    TEST_CASE("test vectors are distinct, nonzero and seed-deterministic")
    {
        const CodeSpec spec = build_generator(5, 1);
        const TestVectorSet a = generate_test_vectors(spec, 50, 7);
        REQUIRE(a.codewords.size() == 50);
        std::set<Poly> seen;
        for (const BitVec& word : a.codewords) {
            const Poly p = Poly::from_bits(word);
            CHECK_FALSE(p.is_zero());
            CHECK(seen.insert(p).second);
        }

        const TestVectorSet b = generate_test_vectors(spec, 50, 7);
        CHECK(a.codewords == b.codewords);
        const TestVectorSet c = generate_test_vectors(spec, 50, 8);
        CHECK(a.codewords != c.codewords);

        const TestVectorSet single = generate_test_vectors(spec, 1, 3);
        CHECK(single.codewords.size() == 1);
    }

    TEST_CASE("a longer draw extends a shorter one with the same seed")
    {
        const CodeSpec spec = build_generator(5, 1);
        const TestVectorSet small = generate_test_vectors(spec, 50, 11);
        const TestVectorSet large = generate_test_vectors(spec, 200, 11);
        for (std::size_t i = 0; i < small.codewords.size(); ++i)
            CHECK(small.codewords[i] == large.codewords[i]);
    }

    TEST_CASE("message space exhaustion")
    {
        const CodeSpec spec = build_generator(3, 1);   // 15 distinct nonzero messages
        CHECK_THROWS_AS(generate_test_vectors(spec, 16, 1), std::invalid_argument);
        const TestVectorSet all = generate_test_vectors(spec, 15, 1);
        CHECK(all.codewords.size() == 15);
    }

    TEST_CASE("noise injection")
    {
        const CodeSpec spec = build_generator(5, 1);
        const TestVectorSet clean = generate_test_vectors(spec, 50, 7);

        const TestVectorSet same = inject_noise(clean, 0.0, 99);
        CHECK(same.codewords == clean.codewords);
        CHECK(same.ber == 0.0);

        const TestVectorSet flipped = inject_noise(clean, 1.0, 99);
        for (std::size_t i = 0; i < clean.codewords.size(); ++i)
            for (std::size_t j = 0; j < clean.codewords[i].size(); ++j)
                CHECK(flipped.codewords[i][j] == (clean.codewords[i][j] ^ 1));

        const TestVectorSet noisy1 = inject_noise(clean, 0.001, 99);
        const TestVectorSet noisy2 = inject_noise(clean, 0.001, 99);
        CHECK(noisy1.codewords == noisy2.codewords);
        CHECK(noisy1.ber == 0.001);
        std::size_t flips = 0;
        for (std::size_t i = 0; i < clean.codewords.size(); ++i)
            for (std::size_t j = 0; j < clean.codewords[i].size(); ++j)
                flips += clean.codewords[i][j] != noisy1.codewords[i][j];
        // 1550 bits at 1e-3: the exact count for this seed, near the 1.55 mean
        CHECK(flips == 2);

        CHECK_THROWS_AS(inject_noise(clean, -0.1, 1), std::invalid_argument);
        CHECK_THROWS_AS(inject_noise(clean, 1.5, 1), std::invalid_argument);
    }
}
