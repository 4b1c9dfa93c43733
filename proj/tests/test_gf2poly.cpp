#include <doctest.h>

#include <stdexcept>

#include "bchsynth/gf2poly.hpp"
#include "bchsynth/rng.hpp"
#include "oracles.hpp"

using bchsynth::BitVec;
using bchsynth::Poly;
using bchsynth::Rng;

namespace {

BitVec bits(const char* s)
{
    BitVec v;
    for (const char* p = s; *p; ++p)
        v.push_back(static_cast<std::uint8_t>(*p - '0'));
    return v;
}

}  // namespace

TEST_SUITE("gf2poly")
{
    TEST_CASE("degree and canonical form")
    {
        CHECK(Poly{}.is_zero());
        CHECK(Poly{}.degree() == bchsynth::kZeroPolyDegree);
        CHECK(Poly::one().degree() == 0);
        CHECK(Poly::monomial(65).degree() == 65);
        CHECK(Poly::from_value(0) == Poly{});
        CHECK(Poly::from_value(0x25).degree() == 5);
    }

    TEST_CASE("addition is coefficient-wise xor")
    {
        const Poly a = Poly::from_value(0x4E);   // X^6+X^3+X^2+X
        const Poly b = Poly::from_value(0x74);   // X^6+X^5+X^4+X^2
        CHECK(a + b == Poly::from_value(0x3A));  // X^5+X^4+X^3+X
        CHECK(a + a == Poly{});
        CHECK(a + Poly{} == a);
    }

    TEST_CASE("multiplication")
    {
        CHECK(Poly::from_value(0x3) * Poly::from_value(0x25) ==
              Poly::from_value(0x6F));   // (X+1)(X^5+X^2+1) = X^6+X^5+X^3+X^2+X+1
        CHECK(Poly::from_value(0x6) * Poly::from_value(0xB) ==
              Poly::from_value(0x3A));   // (X^2+X)(X^3+X+1) = X^5+X^4+X^3+X
        const Poly p = Poly::from_value(0x12345);
        CHECK(p * Poly::one() == p);
        CHECK(p * Poly{} == Poly{});
    }

    TEST_CASE("division with remainder")
    {
        // X^6+X^5+X^4+X^2 is exactly (X^3+X^2) times X^3+X+1
        const auto [q, r] = Poly::divmod(Poly::from_value(0x74), Poly::from_value(0xB));
        CHECK(q == Poly::from_value(0xC));
        CHECK(r.is_zero());

        const Poly p = Poly::from_value(0xABCD);
        const auto [q1, r1] = Poly::divmod(p, Poly::one());
        CHECK(q1 == p);
        CHECK(r1.is_zero());

        CHECK_THROWS_AS(Poly::divmod(p, Poly{}), std::domain_error);
    }

    TEST_CASE("divmod reconstruction on random pairs")
    {
        Rng rng(101);
        for (int i = 0; i < 1000; ++i) {
            const Poly a = oracles::random_poly(rng, 64);
            const Poly b = oracles::random_nonzero_poly(rng, 40);
            const auto [q, r] = Poly::divmod(a, b);
            CHECK(q * b + r == a);
            if (!r.is_zero())
                CHECK(r.degree() < b.degree());
        }
    }

    TEST_CASE("gcd of the worked examples")
    {
        // division chain ends at X^3+X+1
        CHECK(gcd(Poly::from_value(0x74), Poly::from_value(0xB)) == Poly::from_value(0xB));
        // gcd(X^6+X^3+X^2+X, X^6+X^5+X^4+X^2) = X^5+X^4+X^3+X
        CHECK(gcd(Poly::from_value(0x4E), Poly::from_value(0x74)) == Poly::from_value(0x3A));

        const Poly p = Poly::from_value(0x25);
        CHECK(gcd(p, p) == p);
        CHECK(gcd(p, Poly{}) == p);
        CHECK(gcd(Poly{}, p) == p);
        CHECK_THROWS_AS(gcd(Poly{}, Poly{}), std::domain_error);
    }

    TEST_CASE("gcd agrees with brute-force common-divisor search")
    {
        Rng rng(202);
        for (int i = 0; i < 100; ++i) {
            const Poly a = oracles::random_nonzero_poly(rng, 12);
            const Poly b = oracles::random_nonzero_poly(rng, 12);
            CHECK(gcd(a, b) == oracles::max_common_divisor(a, b));
        }
    }

    TEST_CASE("gcd divides both inputs")
    {
        Rng rng(303);
        for (int i = 0; i < 200; ++i) {
            const Poly a = oracles::random_nonzero_poly(rng, 48);
            const Poly b = oracles::random_nonzero_poly(rng, 48);
            const Poly g = gcd(a, b);
            CHECK((a % g).is_zero());
            CHECK((b % g).is_zero());
        }
    }

    TEST_CASE("mulmod")
    {
        const Poly m = Poly::from_value(0xB);
        CHECK(mulmod(Poly::monomial(2), Poly::monomial(2), m) ==
              Poly::from_value(0x6));   // X^4 mod (X^3+X+1) = X^2+X
        const Poly p = Poly::from_value(0x1F3);
        CHECK(mulmod(Poly::one(), p, m) == p % m);
        CHECK_THROWS_AS(mulmod(p, p, Poly{}), std::domain_error);
        CHECK_THROWS_AS(mulmod(p, p, Poly::one()), std::domain_error);

        Rng rng(404);
        for (int i = 0; i < 200; ++i) {
            const Poly a = oracles::random_poly(rng, 32);
            const Poly b = oracles::random_poly(rng, 32);
            Poly mod = oracles::random_nonzero_poly(rng, 16);
            if (mod.degree() < 1)
                mod = Poly::from_value(0xB);
            CHECK(mulmod(a, b, mod) == Poly::divmod(a * b, mod).remainder);
        }
    }

    TEST_CASE("ring identities on random triples")
    {
        Rng rng(505);
        for (int i = 0; i < 200; ++i) {
            const Poly a = oracles::random_poly(rng, 64);
            const Poly b = oracles::random_poly(rng, 64);
            const Poly c = oracles::random_poly(rng, 64);
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }

    TEST_CASE("octal form")
    {
        CHECK(Poly::parse_octal("45") == Poly::from_value(0x25));
        CHECK(Poly::from_value(0x25).to_octal() == "45");
        CHECK(Poly::parse_octal("13") == Poly::from_value(0xB));
        CHECK(Poly::parse_octal("1") == Poly::one());
        CHECK(Poly::parse_octal("0") == Poly{});
        CHECK(Poly{}.to_octal() == "0");
        CHECK_THROWS_AS(Poly::parse_octal(""), std::invalid_argument);
        CHECK_THROWS_AS(Poly::parse_octal("48"), std::invalid_argument);
        CHECK_THROWS_AS(Poly::parse_octal("4x1"), std::invalid_argument);

        Rng rng(606);
        for (int i = 0; i < 1000; ++i) {
            const Poly p = oracles::random_poly(rng, 30);
            CHECK(Poly::parse_octal(p.to_octal()) == p);
        }
    }

    TEST_CASE("bit form matches the codeword vector convention")
    {
        CHECK(Poly::from_bits(bits("1101000")) == Poly::from_value(0xB));    // 1+X+X^3
        CHECK(Poly::from_bits(bits("0010111")) == Poly::from_value(0x74));   // X^2+X^4+X^5+X^6
        CHECK(Poly::from_bits(bits("0000000")) == Poly{});
        CHECK(Poly::from_value(0xB).to_bits(7) == bits("1101000"));
        CHECK_THROWS_AS(Poly::from_value(0xB).to_bits(3), std::invalid_argument);

        Rng rng(707);
        for (int i = 0; i < 200; ++i) {
            const Poly p = oracles::random_poly(rng, 90);
            CHECK(Poly::from_bits(p.to_bits(91)) == p);
            CHECK(Poly::from_bits(p.to_bits(150)) == p);
        }
    }

    TEST_CASE("derivative")
    {
        CHECK(Poly::from_value(0x25).derivative() == Poly::monomial(4));
        CHECK(Poly::monomial(2).derivative() == Poly{});
        Rng rng(808);
        for (int i = 0; i < 100; ++i) {
            const Poly p = oracles::random_poly(rng, 30);
            CHECK((p * p).derivative() == Poly{});
        }
    }

    TEST_CASE("term rendering")
    {
        CHECK(Poly::from_value(0x25).to_term_string() == "X^5+X^2+1");
        CHECK(Poly::from_value(0x3).to_term_string() == "X+1");
        CHECK(Poly::one().to_term_string() == "1");
        CHECK(Poly{}.to_term_string() == "0");
    }

    TEST_CASE("value ordering refines degree ordering")
    {
        CHECK(Poly::from_value(0x25) < Poly::from_value(0x74));
        CHECK(Poly::from_value(0x3) < Poly::from_value(0x25));
        CHECK(Poly::monomial(64) > Poly::from_value(~0ull));
    }
}
