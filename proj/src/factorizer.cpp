#include "bchsynth/factorizer.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bchsynth {

namespace {

std::vector<unsigned> prime_factors_of(unsigned n)
{
    std::vector<unsigned> primes;
    for (unsigned q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            primes.push_back(q);
            while (n % q == 0)
                n /= q;
        }
    }
    if (n > 1)
        primes.push_back(n);
    return primes;
}

// X^(2^k) mod p, by k squarings of X
Poly frobenius_power(unsigned k, const Poly& p)
{
    Poly h = Poly::x() % p;
    for (unsigned i = 0; i < k; ++i)
        h = mulmod(h, h, p);
    return h;
}

std::uint64_t splitmix64(std::uint64_t& state)
{
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// random nonconstant polynomial of degree < max_degree
Poly random_poly_below(unsigned max_degree, std::uint64_t& state)
{
    Poly u;
    for (unsigned base = 0; base < max_degree; base += 64) {
        std::uint64_t w = splitmix64(state);
        const unsigned take = std::min(64u, max_degree - base);
        if (take < 64)
            w &= (std::uint64_t{1} << take) - 1;
        if (w != 0)
            u ^= Poly::from_value(w).shifted_left(base);
    }
    return u;
}

// Equal-degree splitting over GF(2): G is a product of distinct irreducibles,
// all of degree d. The trace map u + u^2 + ... + u^(2^(d-1)) evaluates into
// GF(2) modulo each factor, so its gcd with G splits the factor set roughly
// in half for a random u.
void equal_degree_split(const Poly& G, unsigned d, std::vector<Poly>& out, std::uint64_t& state)
{
    const unsigned deg = static_cast<unsigned>(G.degree());
    if (deg == d) {
        out.push_back(G);
        return;
    }
    for (;;) {
        const Poly u = random_poly_below(deg, state);
        if (u.is_zero())
            continue;
        Poly trace = u;
        Poly pow = u;
        for (unsigned i = 1; i < d; ++i) {
            pow = mulmod(pow, pow, G);
            trace ^= pow;
        }
        if (trace.is_zero())
            continue;
        const Poly g = gcd(trace, G);
        if (g.degree() >= 1 && g.degree() < G.degree()) {
            equal_degree_split(g, d, out, state);
            equal_degree_split(G / g, d, out, state);
            return;
        }
    }
}

// Distinct-degree stage on a square-free input.
void factor_square_free(const Poly& input, std::vector<Poly>& out)
{
    Poly F = input;
    std::uint64_t state = 0x243F6A8885A308D3ull;   // reseeded per call from F below
    for (std::uint64_t w : F.words())
        state ^= splitmix64(w) + (state << 6) + (state >> 2);

    Poly h = Poly::x() % F;
    unsigned d = 0;
    while (F.degree() >= 1 && 2 * (d + 1) <= static_cast<unsigned>(F.degree())) {
        ++d;
        h = mulmod(h, h, F);   // X^(2^d) mod F
        const Poly g = gcd(h + (Poly::x() % F), F);
        if (g.degree() >= 1) {
            equal_degree_split(g, d, out, state);
            F = F / g;
            if (F.degree() < 1)
                return;
            h = h % F;
        }
    }
    if (F.degree() >= 1)
        out.push_back(F);
}

}  // namespace

Poly Factorization::product() const
{
    Poly p = Poly::one();
    for (const Term& term : factors)
        for (unsigned i = 0; i < term.multiplicity; ++i)
            p = p * term.base;
    return p;
}

bool is_irreducible(const Poly& p)
{
    const int d = p.degree();
    if (d < 1)
        throw std::invalid_argument("factorizer: irreducibility is undefined for constants");
    if (d == 1)
        return true;
    if (frobenius_power(static_cast<unsigned>(d), p) != Poly::x() % p)
        return false;
    for (unsigned q : prime_factors_of(static_cast<unsigned>(d))) {
        const Poly h = frobenius_power(static_cast<unsigned>(d) / q, p) + (Poly::x() % p);
        if (h.is_zero() || !gcd(h, p).is_one())
            return false;
    }
    return true;
}

std::vector<std::pair<Poly, unsigned>> square_free_decomposition(const Poly& p)
{
    if (p.degree() < 1)
        throw std::invalid_argument("factorizer: expected degree >= 1");

    std::vector<std::pair<Poly, unsigned>> out;
    const Poly deriv = p.derivative();
    if (deriv.is_zero()) {
        // perfect square in characteristic 2
        for (auto& [base, mult] : square_free_decomposition(p.sqrt()))
            out.emplace_back(base, 2 * mult);
        return out;
    }

    Poly c = gcd(p, deriv);
    Poly w = p / c;
    unsigned i = 1;
    while (!w.is_one()) {
        const Poly y = gcd(w, c);
        const Poly z = w / y;
        if (!z.is_one())
            out.emplace_back(z, i);
        w = y;
        c = c / y;
        ++i;
    }
    if (!c.is_one())
        for (auto& [base, mult] : square_free_decomposition(c.sqrt()))
            out.emplace_back(base, 2 * mult);

    std::sort(out.begin(), out.end());
    return out;
}

Factorization factor(const Poly& p)
{
    if (p.degree() < 1)
        throw std::invalid_argument("factorizer: cannot factor a constant polynomial");

    std::map<Poly, unsigned> merged;
    for (const auto& [part, mult] : square_free_decomposition(p)) {
        std::vector<Poly> irreducibles;
        factor_square_free(part, irreducibles);
        for (const Poly& base : irreducibles)
            merged[base] += mult;
    }

    Factorization f;
    for (auto& [base, mult] : merged)
        f.factors.push_back({base, mult});
    return f;
}

DivisorList divisors(const Factorization& f, std::size_t cap)
{
    std::size_t count = 1;
    bool over = false;
    for (const auto& term : f.factors) {
        count *= term.multiplicity + 1;
        if (count - 1 > cap) {
            over = true;
            break;
        }
    }

    DivisorList list;
    if (!over) {
        std::vector<Poly> divs{Poly::one()};
        for (const auto& term : f.factors) {
            std::vector<Poly> next;
            next.reserve(divs.size() * (term.multiplicity + 1));
            Poly power = Poly::one();
            for (unsigned e = 0; e <= term.multiplicity; ++e) {
                for (const Poly& d : divs)
                    next.push_back(d * power);
                power = power * term.base;
            }
            divs = std::move(next);
        }
        for (Poly& d : divs)
            if (!d.is_one())
                list.divisors.push_back(std::move(d));
    } else {
        list.truncated = true;
        list.divisors.push_back(f.product());
        for (const auto& term : f.factors) {
            list.divisors.push_back(term.base);
            if (term.multiplicity > 1) {
                Poly power = Poly::one();
                for (unsigned e = 0; e < term.multiplicity; ++e)
                    power = power * term.base;
                list.divisors.push_back(power);
            }
        }
    }
    std::sort(list.divisors.begin(), list.divisors.end());
    list.divisors.erase(std::unique(list.divisors.begin(), list.divisors.end()),
                        list.divisors.end());
    return list;
}

}  // namespace bchsynth
