// Blind generator-polynomial detection: segment a bitstream, run pairwise
// polynomial GCDs, credit every divisor of every GCD into a correlation
// table, rank candidates, and sweep unknown block lengths.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bchsynth/factorizer.hpp"
#include "bchsynth/gf2m_field.hpp"
#include "bchsynth/gf2poly.hpp"

namespace bchsynth {

// Raised when a stream carries too little usable material to detect anything
// (fewer than two distinct nonzero blocks, or no pairs survived filtering).
struct DetectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DetectorConfig {
    std::size_t pair_cap = 20000;        // sampled down beyond this many pairs
    std::size_t divisor_cap = kDefaultDivisorCap;
    std::uint32_t seed = 0;              // pair-sampling seed
    std::size_t max_blocks = 0;          // keep only the first N usable blocks; 0 = all
    std::size_t offset = 0;              // bits skipped before segmentation
    bool allow_non_bch_n = false;        // relaxed validity at n != 2^m - 1
    int threads = 0;                     // 0 = parallel default, 1 = serial reference
};

// Nonzero block polynomials parsed from consecutive n-bit windows.
struct BlockSet {
    unsigned n = 0;
    std::vector<Poly> polys;
    std::size_t skipped_zero = 0;
    std::size_t total_blocks = 0;
};

struct GcdStream {
    std::vector<Poly> gcds;
    bool sampled = false;   // pair count exceeded the cap and was sampled
};

// Divisor-credit counts: scores[p] = number of pair GCDs that p divides.
struct CorrelationTable {
    unsigned n = 0;
    std::size_t pairs_considered = 0;
    std::map<Poly, std::uint64_t> scores;
    std::size_t truncation_events = 0;
    bool sampled = false;
};

struct CandidateEntry {
    Poly poly;
    int degree = 0;
    std::uint64_t score = 0;
    double normalized = 0.0;
    bool valid = false;
    unsigned est_k = 0;
    unsigned est_d = 0;
    unsigned est_t = 0;
};

struct DetectionReport {
    unsigned n = 0;
    std::size_t pairs_considered = 0;
    std::size_t usable_blocks = 0;
    std::size_t skipped_zero = 0;
    bool sampled = false;
    std::size_t truncation_events = 0;
    std::vector<CandidateEntry> candidates;   // ranked
    std::optional<CandidateEntry> winner;
    std::string diagnostic;
};

struct SweepEntry {
    unsigned n = 0;
    std::optional<CandidateEntry> best;   // best valid candidate at this n
    bool degraded = false;                // stream too short for two blocks
};

struct SweepReport {
    std::vector<SweepEntry> entries;
    std::optional<unsigned> chosen_n;
    std::optional<Poly> chosen_g;
};

// Consecutive non-overlapping n-bit blocks from offset 0, each parsed
// constant-term-first; all-zero blocks are dropped and counted, a trailing
// partial block is discarded. Throws when fewer than 2n bits are available.
BlockSet segment(std::span<const std::uint8_t> bits, unsigned n);

// GCDs over all unordered pairs (i, j), i < j, in index order; pairs of
// identical polynomials are skipped. Beyond `pair_cap` total pairs a seeded
// uniform sample is processed instead. Throws with fewer than 2 usable blocks.
GcdStream pairwise_gcds(const BlockSet& blocks, std::size_t pair_cap, std::uint32_t seed);

// Factors each GCD of degree >= 1 and credits every monic divisor once; a GCD
// equal to 1 only increments pairs_considered. Order-independent.
CorrelationTable accumulate(std::span<const Poly> gcds, std::size_t divisor_cap);

// The pair kernel behind analyze(): equals accumulate(pairwise_gcds(...)) and
// runs the pair loop OpenMP-parallel with per-thread tables merged at the end.
// correlate_serial is the reference composition kept for testing; correlate
// dispatches on cfg.threads.
CorrelationTable correlate(const BlockSet& blocks, const DetectorConfig& cfg);
CorrelationTable correlate_serial(const BlockSet& blocks, const DetectorConfig& cfg);

// A candidate is a plausible generator for block length n: not 1, degree in
// [1, n-1], divides X^n + 1, and the parity-check bound deg <= m*t holds with
// t >= 1. With ctx == nullptr (n not of the form 2^m - 1) every candidate is
// invalid unless `relaxed`, which keeps only the divisibility and degree
// checks.
bool validity_check(const Poly& candidate, unsigned n, const FieldCtx* ctx,
                    bool relaxed = false);

// Candidates ordered by (score desc, degree desc, value asc), annotated with
// validity and (k, d, t); winner is the first valid. Throws when the table
// saw no pairs at all.
DetectionReport rank(const CorrelationTable& table, const FieldCtx* ctx,
                     bool relaxed = false);

struct ParamEstimate {
    unsigned k = 0;
    unsigned d = 0;
    unsigned t = 0;
};

// k = n - deg(g) plus the designed-distance pair; requires a valid candidate.
ParamEstimate estimate_params(const Poly& g, unsigned n, const FieldCtx& ctx);

// segment -> pairwise GCDs -> accumulate -> rank at a fixed block length.
DetectionReport analyze(std::span<const std::uint8_t> bits, unsigned n,
                        const DetectorConfig& cfg);

// analyze at every n in [n_min, n_max]; chosen n maximizes the best valid
// candidate's normalized score, ties to the smaller n.
SweepReport sweep(std::span<const std::uint8_t> bits, unsigned n_min, unsigned n_max,
                  const DetectorConfig& cfg);

}  // namespace bchsynth
