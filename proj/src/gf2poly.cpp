#include "bchsynth/gf2poly.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>

namespace bchsynth {

namespace {

constexpr unsigned kWordBits = 64;

std::size_t words_for(std::size_t bits)
{
    return (bits + kWordBits - 1) / kWordBits;
}

}  // namespace

void Poly::trim()
{
    while (!words_.empty() && words_.back() == 0)
        words_.pop_back();
}

void Poly::set_bit(unsigned i)
{
    const std::size_t w = i / kWordBits;
    if (w >= words_.size())
        words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (i % kWordBits);
}

Poly Poly::monomial(unsigned degree)
{
    Poly p;
    p.set_bit(degree);
    return p;
}

Poly Poly::from_value(std::uint64_t value)
{
    Poly p;
    if (value != 0)
        p.words_.push_back(value);
    return p;
}

Poly Poly::from_bits(std::span<const std::uint8_t> bits)
{
    Poly p;
    p.words_.resize(words_for(bits.size()), 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == 1)
            p.words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
        else if (bits[i] != 0)
            throw std::invalid_argument("gf2poly: bit values must be 0 or 1");
    }
    p.trim();
    return p;
}

Poly Poly::parse_octal(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("gf2poly: empty octal string");
    Poly p;
    for (char c : text) {
        if (c < '0' || c > '7')
            throw std::invalid_argument("gf2poly: invalid octal digit");
        p = p.shifted_left(3);
        if (c != '0')
            p ^= Poly::from_value(static_cast<std::uint64_t>(c - '0'));
    }
    return p;
}

int Poly::degree() const
{
    if (words_.empty())
        return kZeroPolyDegree;
    const unsigned top = kWordBits - 1 - std::countl_zero(words_.back());
    return static_cast<int>((words_.size() - 1) * kWordBits + top);
}

bool Poly::coeff(unsigned i) const
{
    const std::size_t w = i / kWordBits;
    if (w >= words_.size())
        return false;
    return (words_[w] >> (i % kWordBits)) & 1;
}

std::size_t Poly::weight() const
{
    std::size_t count = 0;
    for (std::uint64_t w : words_)
        count += std::popcount(w);
    return count;
}

Poly& Poly::operator^=(const Poly& rhs)
{
    if (rhs.words_.size() > words_.size())
        words_.resize(rhs.words_.size(), 0);
    for (std::size_t i = 0; i < rhs.words_.size(); ++i)
        words_[i] ^= rhs.words_[i];
    trim();
    return *this;
}

void Poly::xor_shifted(const Poly& src, unsigned shift)
{
    const std::size_t word_shift = shift / kWordBits;
    const unsigned bit_shift = shift % kWordBits;
    const std::size_t need = src.words_.size() + word_shift + (bit_shift != 0 ? 1 : 0);
    if (need > words_.size())
        words_.resize(need, 0);
    if (bit_shift == 0) {
        for (std::size_t i = 0; i < src.words_.size(); ++i)
            words_[i + word_shift] ^= src.words_[i];
    } else {
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < src.words_.size(); ++i) {
            const std::uint64_t w = src.words_[i];
            words_[i + word_shift] ^= (w << bit_shift) | carry;
            carry = w >> (kWordBits - bit_shift);
        }
        if (carry != 0)
            words_[src.words_.size() + word_shift] ^= carry;
    }
    trim();
}

Poly Poly::shifted_left(unsigned k) const
{
    if (is_zero())
        return {};
    Poly r;
    r.xor_shifted(*this, k);
    return r;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    // iterate set bits of the lower-degree operand
    const Poly& lo = a.degree() <= b.degree() ? a : b;
    const Poly& hi = a.degree() <= b.degree() ? b : a;
    Poly r;
    r.words_.resize(words_for(static_cast<std::size_t>(a.degree()) + b.degree() + 1), 0);
    for (std::size_t i = 0; i < lo.words_.size(); ++i) {
        std::uint64_t w = lo.words_[i];
        while (w != 0) {
            const unsigned j = std::countr_zero(w);
            w &= w - 1;
            r.xor_shifted(hi, static_cast<unsigned>(i * kWordBits + j));
        }
    }
    r.trim();
    return r;
}

DivMod Poly::divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw std::domain_error("gf2poly: division by zero polynomial");
    Poly r = a;
    const int db = b.degree();
    if (a.is_zero() || a.degree() < db)
        return {Poly{}, std::move(r)};
    Poly q;
    while (!r.is_zero()) {
        const int dr = r.degree();
        if (dr < db)
            break;
        const unsigned shift = static_cast<unsigned>(dr - db);
        q.set_bit(shift);
        r.xor_shifted(b, shift);
    }
    return {std::move(q), std::move(r)};
}

Poly Poly::derivative() const
{
    constexpr std::uint64_t kOddBits = 0xAAAAAAAAAAAAAAAAull;
    Poly r;
    r.words_.resize(words_.size(), 0);
    for (std::size_t i = 0; i < words_.size(); ++i)
        r.words_[i] = (words_[i] & kOddBits) >> 1;
    r.trim();
    return r;
}

Poly Poly::sqrt() const
{
    Poly r;
    const int d = degree();
    if (d == kZeroPolyDegree)
        return r;
    for (int i = 0; i <= d; ++i) {
        if (!coeff(static_cast<unsigned>(i)))
            continue;
        if (i % 2 != 0)
            throw std::domain_error("gf2poly: sqrt of a non-square polynomial");
        r.set_bit(static_cast<unsigned>(i / 2));
    }
    return r;
}

std::string Poly::to_octal() const
{
    if (is_zero())
        return "0";
    const int d = degree();
    std::string out;
    for (int pos = (d / 3) * 3; pos >= 0; pos -= 3) {
        unsigned digit = 0;
        for (unsigned b = 0; b < 3; ++b)
            if (coeff(static_cast<unsigned>(pos) + b))
                digit |= 1u << b;
        out.push_back(static_cast<char>('0' + digit));
    }
    return out;
}

std::string Poly::to_term_string() const
{
    if (is_zero())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (!coeff(static_cast<unsigned>(i)))
            continue;
        if (!out.empty())
            out += "+";
        if (i == 0)
            out += "1";
        else if (i == 1)
            out += "X";
        else
            out += "X^" + std::to_string(i);
    }
    return out;
}

BitVec Poly::to_bits(std::size_t width) const
{
    const int d = degree();
    if (d != kZeroPolyDegree && width < static_cast<std::size_t>(d) + 1)
        throw std::invalid_argument("gf2poly: width too small for polynomial");
    BitVec bits(width, 0);
    for (std::size_t i = 0; i < width; ++i)
        bits[i] = coeff(static_cast<unsigned>(i)) ? 1 : 0;
    return bits;
}

std::strong_ordering Poly::operator<=>(const Poly& rhs) const
{
    if (words_.size() != rhs.words_.size())
        return words_.size() <=> rhs.words_.size();
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (words_[i] != rhs.words_[i])
            return words_[i] <=> rhs.words_[i];
    }
    return std::strong_ordering::equal;
}

Poly operator/(const Poly& a, const Poly& b)
{
    return Poly::divmod(a, b).quotient;
}

Poly operator%(const Poly& a, const Poly& b)
{
    return Poly::divmod(a, b).remainder;
}

std::ostream& operator<<(std::ostream& os, const Poly& p)
{
    return os << p.to_octal();
}

Poly gcd(Poly a, Poly b)
{
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("gf2poly: gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus)
{
    if (modulus.is_zero() || modulus.degree() < 1)
        throw std::domain_error("gf2poly: modulus must have degree >= 1");
    return (a * b) % modulus;
}

}  // namespace bchsynth
