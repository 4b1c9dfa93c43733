// Dense polynomials over GF(2), packed into 64-bit words.
#pragma once

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bchsynth {

// A sequence of bits; element values are 0 or 1, index i is the stream/bit
// position i (for polynomials: the coefficient of X^i).
using BitVec = std::vector<std::uint8_t>;

// Degree assigned to the zero polynomial. A far-out sentinel instead of -1 so
// that degree arithmetic on the zero polynomial fails loudly.
inline constexpr int kZeroPolyDegree = std::numeric_limits<int>::min();

struct DivMod;   // quotient/remainder pair, defined below

// Binary polynomial in canonical form: bit i of words()[i/64] is the
// coefficient of X^i, and the word vector carries no trailing zero words.
// Every nonzero polynomial is monic since the leading coefficient is 1.
class Poly {
public:
    Poly() = default;

    static Poly one() { return monomial(0); }
    static Poly x() { return monomial(1); }
    static Poly monomial(unsigned degree);

    // bit i of `value` becomes the coefficient of X^i
    static Poly from_value(std::uint64_t value);

    // bits[i] (0 or 1) is the coefficient of X^i; see Table-style codeword
    // vectors where the constant term is transmitted first
    static Poly from_bits(std::span<const std::uint8_t> bits);

    // octal rendering of the coefficient string read from the highest degree
    // down to the constant term ("45" -> 100101 -> X^5+X^2+1)
    static Poly parse_octal(std::string_view text);

    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
    int degree() const;
    bool coeff(unsigned i) const;
    std::size_t weight() const;

    Poly& operator^=(const Poly& rhs);
    friend Poly operator^(Poly lhs, const Poly& rhs) { lhs ^= rhs; return lhs; }
    // over GF(2), + is XOR
    friend Poly operator+(Poly lhs, const Poly& rhs) { lhs ^= rhs; return lhs; }
    Poly& operator+=(const Poly& rhs) { return *this ^= rhs; }

    friend Poly operator*(const Poly& a, const Poly& b);

    // throws std::domain_error when b is zero
    static DivMod divmod(const Poly& a, const Poly& b);

    Poly shifted_left(unsigned k) const;   // multiply by X^k

    // formal derivative over GF(2): even-power terms vanish
    Poly derivative() const;

    // inverse of squaring; requires every set bit at an even position
    Poly sqrt() const;

    std::string to_octal() const;
    // "X^5+X^2+1"; zero renders as "0"
    std::string to_term_string() const;
    // throws when width < degree+1
    BitVec to_bits(std::size_t width) const;

    bool operator==(const Poly&) const = default;
    // integer-value order: equals octal-string order and refines degree order
    std::strong_ordering operator<=>(const Poly& rhs) const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void trim();
    void set_bit(unsigned i);
    void xor_shifted(const Poly& src, unsigned shift);

    std::vector<std::uint64_t> words_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

// prints the octal form
std::ostream& operator<<(std::ostream& os, const Poly& p);

// Euclidean GCD; gcd(p, 0) = p. Throws std::domain_error when both are zero.
// The result is the unique monic GCD (all nonzero GF(2) polynomials are monic).
Poly gcd(Poly a, Poly b);

// (a*b) mod modulus; throws std::domain_error on a zero or constant modulus
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus);

}  // namespace bchsynth
