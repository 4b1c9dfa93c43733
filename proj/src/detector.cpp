#include "bchsynth/detector.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bchsynth/rng.hpp"

namespace bchsynth {

namespace {

struct PairPlan {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    bool sampled = false;
};

PairPlan enumerate_pairs(std::size_t block_count, std::size_t pair_cap, std::uint32_t seed)
{
    PairPlan plan;
    const std::size_t total = block_count * (block_count - 1) / 2;
    if (total <= pair_cap) {
        plan.pairs.reserve(total);
        for (std::uint32_t i = 0; i + 1 < block_count; ++i)
            for (std::uint32_t j = i + 1; j < block_count; ++j)
                plan.pairs.emplace_back(i, j);
        return plan;
    }
    plan.sampled = true;
    Rng rng(seed);
    std::set<std::pair<std::uint32_t, std::uint32_t>> chosen;
    while (chosen.size() < pair_cap) {
        std::uint32_t i = rng.below(static_cast<std::uint32_t>(block_count));
        std::uint32_t j = rng.below(static_cast<std::uint32_t>(block_count));
        if (i == j)
            continue;
        if (i > j)
            std::swap(i, j);
        chosen.emplace(i, j);
    }
    plan.pairs.assign(chosen.begin(), chosen.end());
    return plan;
}

void credit_gcd(const Poly& g, std::size_t divisor_cap, CorrelationTable& table)
{
    ++table.pairs_considered;
    if (g.degree() < 1)
        return;   // coprime pair, nothing to credit
    const DivisorList list = divisors(factor(g), divisor_cap);
    if (list.truncated)
        ++table.truncation_events;
    for (const Poly& d : list.divisors)
        ++table.scores[d];
}

void merge_into(CorrelationTable& table, const CorrelationTable& part)
{
    table.pairs_considered += part.pairs_considered;
    table.truncation_events += part.truncation_events;
    for (const auto& [poly, score] : part.scores)
        table.scores[poly] += score;
}

std::optional<FieldCtx> field_for_block_length(unsigned n)
{
    const unsigned size = n + 1;
    if ((size & (size - 1)) != 0)
        return std::nullopt;
    unsigned m = 0;
    while ((1u << m) < size)
        ++m;
    if (m < 3 || m > 16)
        return std::nullopt;
    return build_field(m);
}

bool rank_order(const CandidateEntry& a, const CandidateEntry& b)
{
    if (a.score != b.score)
        return a.score > b.score;
    if (a.degree != b.degree)
        return a.degree > b.degree;
    return a.poly < b.poly;
}

}  // namespace

BlockSet segment(std::span<const std::uint8_t> bits, unsigned n)
{
    if (n < 3)
        throw std::invalid_argument("detector: block length must be at least 3");
    if (bits.size() < 2 * static_cast<std::size_t>(n))
        throw std::invalid_argument("detector: stream shorter than two blocks");

    BlockSet blocks;
    blocks.n = n;
    for (std::size_t start = 0; start + n <= bits.size(); start += n) {
        ++blocks.total_blocks;
        Poly p = Poly::from_bits(bits.subspan(start, n));
        if (p.is_zero())
            ++blocks.skipped_zero;
        else
            blocks.polys.push_back(std::move(p));
    }
    return blocks;
}

GcdStream pairwise_gcds(const BlockSet& blocks, std::size_t pair_cap, std::uint32_t seed)
{
    if (blocks.polys.size() < 2)
        throw DetectionError("detector: need at least 2 usable blocks");
    const PairPlan plan = enumerate_pairs(blocks.polys.size(), pair_cap, seed);
    GcdStream stream;
    stream.sampled = plan.sampled;
    stream.gcds.reserve(plan.pairs.size());
    for (const auto& [i, j] : plan.pairs) {
        if (blocks.polys[i] == blocks.polys[j])
            continue;
        stream.gcds.push_back(gcd(blocks.polys[i], blocks.polys[j]));
    }
    return stream;
}

CorrelationTable accumulate(std::span<const Poly> gcds, std::size_t divisor_cap)
{
    CorrelationTable table;
    for (const Poly& g : gcds)
        credit_gcd(g, divisor_cap, table);
    return table;
}

CorrelationTable correlate_serial(const BlockSet& blocks, const DetectorConfig& cfg)
{
    const GcdStream stream = pairwise_gcds(blocks, cfg.pair_cap, cfg.seed);
    CorrelationTable table = accumulate(stream.gcds, cfg.divisor_cap);
    table.n = blocks.n;
    table.sampled = stream.sampled;
    return table;
}

CorrelationTable correlate(const BlockSet& blocks, const DetectorConfig& cfg)
{
#ifdef _OPENMP
    if (cfg.threads == 1)
        return correlate_serial(blocks, cfg);
    if (blocks.polys.size() < 2)
        throw DetectionError("detector: need at least 2 usable blocks");

    const PairPlan plan = enumerate_pairs(blocks.polys.size(), cfg.pair_cap, cfg.seed);
    CorrelationTable table;
    table.n = blocks.n;
    table.sampled = plan.sampled;

    const int nthreads = cfg.threads > 1 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel num_threads(nthreads)
    {
        CorrelationTable local;
#pragma omp for schedule(dynamic, 64) nowait
        for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(plan.pairs.size()); ++idx) {
            const auto& [i, j] = plan.pairs[static_cast<std::size_t>(idx)];
            if (blocks.polys[i] == blocks.polys[j])
                continue;
            credit_gcd(gcd(blocks.polys[i], blocks.polys[j]), cfg.divisor_cap, local);
        }
#pragma omp critical
        merge_into(table, local);
    }
    return table;
#else
    return correlate_serial(blocks, cfg);
#endif
}

bool validity_check(const Poly& candidate, unsigned n, const FieldCtx* ctx, bool relaxed)
{
    const int deg = candidate.degree();
    if (deg < 1 || static_cast<unsigned>(deg) > n - 1)
        return false;
    const Poly xn1 = Poly::monomial(n) + Poly::one();
    if (!(xn1 % candidate).is_zero())
        return false;
    if (ctx == nullptr)
        return relaxed;
    const DistanceEstimate est = designed_distance(*ctx, candidate);
    return est.t >= 1 && static_cast<unsigned>(deg) <= ctx->m() * est.t;
}

DetectionReport rank(const CorrelationTable& table, const FieldCtx* ctx, bool relaxed)
{
    if (table.pairs_considered == 0)
        throw DetectionError("detector: no codeword pairs to rank");

    DetectionReport report;
    report.n = table.n;
    report.pairs_considered = table.pairs_considered;
    report.sampled = table.sampled;
    report.truncation_events = table.truncation_events;

    const Poly xn1 = Poly::monomial(table.n) + Poly::one();
    for (const auto& [poly, score] : table.scores) {
        CandidateEntry entry;
        entry.poly = poly;
        entry.degree = poly.degree();
        entry.score = score;
        entry.normalized = static_cast<double>(score) / static_cast<double>(table.pairs_considered);
        entry.valid = validity_check(poly, table.n, ctx, relaxed);
        entry.est_k = table.n - static_cast<unsigned>(entry.degree);
        if (ctx != nullptr && (xn1 % poly).is_zero()) {
            const DistanceEstimate est = designed_distance(*ctx, poly);
            entry.est_d = est.d;
            entry.est_t = est.t;
        }
        report.candidates.push_back(std::move(entry));
    }
    std::sort(report.candidates.begin(), report.candidates.end(), rank_order);

    const auto first_valid = std::find_if(report.candidates.begin(), report.candidates.end(),
                                          [](const CandidateEntry& e) { return e.valid; });
    if (first_valid != report.candidates.end())
        report.winner = *first_valid;
    else
        report.diagnostic = "no valid generator candidate for this block length";
    return report;
}

ParamEstimate estimate_params(const Poly& g, unsigned n, const FieldCtx& ctx)
{
    if (!validity_check(g, n, &ctx))
        throw std::invalid_argument("detector: not a valid generator for this block length");
    const DistanceEstimate est = designed_distance(ctx, g);
    return {n - static_cast<unsigned>(g.degree()), est.d, est.t};
}

DetectionReport analyze(std::span<const std::uint8_t> bits, unsigned n,
                        const DetectorConfig& cfg)
{
    const std::span<const std::uint8_t> window =
        bits.subspan(std::min(cfg.offset, bits.size()));
    BlockSet blocks = segment(window, n);
    if (cfg.max_blocks > 0 && blocks.polys.size() > cfg.max_blocks)
        blocks.polys.resize(cfg.max_blocks);

    const CorrelationTable table = correlate(blocks, cfg);
    const std::optional<FieldCtx> ctx = field_for_block_length(n);

    DetectionReport report = rank(table, ctx ? &*ctx : nullptr, cfg.allow_non_bch_n);
    report.usable_blocks = blocks.polys.size();
    report.skipped_zero = blocks.skipped_zero;
    return report;
}

SweepReport sweep(std::span<const std::uint8_t> bits, unsigned n_min, unsigned n_max,
                  const DetectorConfig& cfg)
{
    if (n_min < 3 || n_max < n_min)
        throw std::invalid_argument("detector: invalid block-length range");

    SweepReport report;
    double best_normalized = -1.0;
    const std::size_t avail = bits.size() - std::min(cfg.offset, bits.size());
    for (unsigned n = n_min; n <= n_max; ++n) {
        SweepEntry entry;
        entry.n = n;
        if (avail < 2 * static_cast<std::size_t>(n)) {
            entry.degraded = true;
            report.entries.push_back(std::move(entry));
            continue;
        }
        try {
            entry.best = analyze(bits, n, cfg).winner;
        } catch (const DetectionError&) {
            // nothing usable at this n
        }
        if (entry.best && entry.best->normalized > best_normalized) {
            best_normalized = entry.best->normalized;
            report.chosen_n = n;
            report.chosen_g = entry.best->poly;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace bchsynth
