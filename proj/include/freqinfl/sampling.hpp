#ifndef FREQINFL_SAMPLING_HPP
#define FREQINFL_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "freqinfl/lexicon.hpp"

namespace freqinfl {

/// Temperature-weighted sampling distribution over lexicon entries:
/// weight[i] = count[i]^tau, probability[i] = weight[i] / sum of weights.
struct SamplingDistribution {
    double tau = 0.0;
    std::vector<std::size_t> entry_ids;  // indices into the source lexicon
    std::vector<double> weights;
    std::vector<double> probabilities;
    std::vector<double> cumulative;      // running weight sums, for draws
};

/// weight[i] = counts[i]^tau. Counts must be >= 1. Throws NumericError when
/// a weight is not finite or the weight dynamic range exceeds 1e300 (rare
/// entries would flush to zero and silently leave the support).
std::vector<double> compute_weights(const std::vector<std::uint64_t>& counts,
                                    double tau);

SamplingDistribution distribution(const Lexicon& lexicon, double tau);

/// One categorical draw by binary search over running weight sums;
/// total = cumulative.back().
std::size_t categorical_draw(const std::vector<double>& cumulative,
                             std::mt19937_64& gen);

/// n independent categorical draws (with replacement), deterministic per
/// seed. Returned values are entry_ids elements.
std::vector<std::size_t> draw(const SamplingDistribution& dist, std::size_t n,
                              std::uint64_t seed);

} // namespace freqinfl

#endif // FREQINFL_SAMPLING_HPP
