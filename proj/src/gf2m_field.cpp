#include "bchsynth/gf2m_field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bchsynth {

namespace {

// Defaults reproduce the standard tables; each entry is still validated for
// primitivity at construction instead of being trusted.
const char* default_prim_poly_octal(unsigned m)
{
    switch (m) {
    case 3: return "13";
    case 4: return "23";
    case 5: return "45";
    case 6: return "103";
    case 7: return "211";
    case 8: return "435";
    case 9: return "1021";
    case 10: return "2011";
    case 11: return "4005";
    case 12: return "10123";
    case 13: return "20033";
    case 14: return "42103";
    case 15: return "100003";
    case 16: return "210013";
    default: return nullptr;
    }
}

}  // namespace

std::uint32_t FieldCtx::eval_at_alpha_pow(const Poly& p, unsigned i) const
{
    const std::uint32_t x = exp(i);
    std::uint32_t acc = 0;
    for (int d = p.degree(); d >= 0; --d) {
        acc = mul(acc, x);
        if (p.coeff(static_cast<unsigned>(d)))
            acc ^= 1;
    }
    return acc;
}

FieldCtx build_field(unsigned m, const Poly& prim_poly)
{
    if (m < 3 || m > 16)
        throw std::invalid_argument("gf2m: m must be in [3, 16]");
    if (prim_poly.degree() != static_cast<int>(m))
        throw std::invalid_argument("gf2m: primitive polynomial must have degree m");

    FieldCtx ctx;
    ctx.m_ = m;
    ctx.n_ = (1u << m) - 1;
    ctx.prim_poly_ = prim_poly;
    ctx.exp_.assign(ctx.n_, 0);
    ctx.log_.assign(std::size_t{1} << m, 0);

    // low m bits of the modulus, folded in whenever alpha*cur overflows
    std::uint32_t reduction = 0;
    for (unsigned i = 0; i < m; ++i)
        if (prim_poly.coeff(i))
            reduction |= 1u << i;

    std::uint32_t cur = 1;
    for (unsigned i = 0; i < ctx.n_; ++i) {
        if (cur == 1 && i != 0)
            throw std::invalid_argument("gf2m: polynomial " + prim_poly.to_octal() +
                                        " (oct) is not primitive");
        ctx.exp_[i] = cur;
        ctx.log_[cur] = i;
        cur <<= 1;
        if (cur & (1u << m))
            cur = (cur ^ (1u << m)) ^ reduction;
    }
    if (cur != 1)
        throw std::invalid_argument("gf2m: polynomial " + prim_poly.to_octal() +
                                    " (oct) is not primitive");
    return ctx;
}

FieldCtx build_field(unsigned m)
{
    const char* oct = default_prim_poly_octal(m);
    if (oct == nullptr)
        throw std::invalid_argument("gf2m: m must be in [3, 16]");
    return build_field(m, Poly::parse_octal(oct));
}

std::vector<CyclotomicCoset> cyclotomic_cosets(const FieldCtx& ctx)
{
    const unsigned n = ctx.n();
    std::vector<bool> seen(n, false);
    std::vector<CyclotomicCoset> cosets;
    for (unsigned r = 1; r < n; ++r) {
        if (seen[r])
            continue;
        CyclotomicCoset coset;
        coset.representative = r;
        unsigned e = r;
        do {
            seen[e] = true;
            coset.members.push_back(e);
            e = (e * 2) % n;
        } while (e != r);
        std::sort(coset.members.begin(), coset.members.end());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

Poly minimal_polynomial(const FieldCtx& ctx, const CyclotomicCoset& coset)
{
    // expand prod (X + alpha^j) with coefficients in GF(2^m)
    std::vector<std::uint32_t> coeffs{1};
    for (unsigned j : coset.members) {
        const std::uint32_t root = ctx.exp(j);
        std::vector<std::uint32_t> next(coeffs.size() + 1, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] ^= coeffs[i];
            next[i] ^= ctx.mul(coeffs[i], root);
        }
        coeffs = std::move(next);
    }
    Poly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 1)
            p ^= Poly::monomial(static_cast<unsigned>(i));
        else if (coeffs[i] != 0)
            throw std::logic_error("gf2m: minimal polynomial has a coefficient outside GF(2)");
    }
    return p;
}

std::vector<unsigned> roots_of(const FieldCtx& ctx, const Poly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("gf2m: roots_of requires a nonzero polynomial");
    std::vector<unsigned> roots;
    for (unsigned i = 0; i < ctx.n(); ++i)
        if (ctx.eval_at_alpha_pow(p, i) == 0)
            roots.push_back(i);
    return roots;
}

DistanceEstimate designed_distance(const FieldCtx& ctx, const Poly& g)
{
    const Poly xn1 = Poly::monomial(ctx.n()) + Poly::one();
    if (!(xn1 % g).is_zero())
        throw std::invalid_argument("gf2m: polynomial does not divide X^n + 1");

    const std::vector<unsigned> roots = roots_of(ctx, g);
    std::vector<bool> is_root(ctx.n(), false);
    for (unsigned r : roots)
        is_root[r] = true;

    unsigned delta = 0;
    while (delta + 1 < ctx.n() && is_root[delta + 1])
        ++delta;

    DistanceEstimate est;
    est.d = delta + 1;
    est.t = (est.d - 1) / 2;
    return est;
}

}  // namespace bchsynth
