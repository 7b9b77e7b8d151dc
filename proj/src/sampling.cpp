#include "freqinfl/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "freqinfl/errors.hpp"
#include "freqinfl/rng.hpp"
#include "freqinfl/tsv.hpp"

namespace freqinfl {

std::vector<double> compute_weights(const std::vector<std::uint64_t>& counts,
                                    double tau) {
    if (!std::isfinite(tau))
        throw NumericError("temperature must be finite, got " +
                           tsv::format_full(tau));
    std::vector<double> weights;
    weights.reserve(counts.size());
    double min_w = std::numeric_limits<double>::infinity();
    double max_w = 0.0;
    for (std::uint64_t count : counts) {
        if (count == 0)
            throw DataError("count 0 has no finite weight for negative "
                            "temperatures; counts must be positive");
        // std::pow, not exp(tau*log(c)): pow is exact on exact cases like
        // 400^0.5 = 20, which the weight arithmetic contract requires.
        double w = std::pow(static_cast<double>(count), tau);
        if (!std::isfinite(w) || w <= 0.0)
            throw NumericError("weight " + tsv::format_full(w) +
                               " for count " + std::to_string(count) +
                               " at temperature " + tsv::format_full(tau) +
                               " is out of double range");
        min_w = std::min(min_w, w);
        max_w = std::max(max_w, w);
        weights.push_back(w);
    }
    if (!weights.empty() && max_w / min_w > 1e300)
        throw NumericError(
            "weight dynamic range " + tsv::format_full(max_w / min_w) +
            " exceeds 1e300 at temperature " + tsv::format_full(tau) +
            "; rare entries would underflow to zero");
    return weights;
}

SamplingDistribution distribution(const Lexicon& lexicon, double tau) {
    if (lexicon.empty())
        throw DataError("cannot build a sampling distribution over an empty "
                        "lexicon");
    std::vector<std::uint64_t> counts;
    counts.reserve(lexicon.type_count());
    for (const LexEntry& e : lexicon.entries()) counts.push_back(e.count);

    SamplingDistribution dist;
    dist.tau = tau;
    try {
        dist.weights = compute_weights(counts, tau);
    } catch (const NumericError& e) {
        throw NumericError(std::string(e.what()) + " (lexicon of " +
                           std::to_string(lexicon.type_count()) + " entries)");
    }
    dist.entry_ids.resize(dist.weights.size());
    for (std::size_t i = 0; i < dist.entry_ids.size(); ++i)
        dist.entry_ids[i] = i;

    dist.cumulative.reserve(dist.weights.size());
    double total = 0.0;
    for (double w : dist.weights) {
        total += w;
        dist.cumulative.push_back(total);
    }
    if (!std::isfinite(total))
        throw NumericError("total sampling weight overflows double at "
                           "temperature " + tsv::format_full(tau));
    dist.probabilities.reserve(dist.weights.size());
    for (double w : dist.weights) dist.probabilities.push_back(w / total);
    return dist;
}

std::size_t categorical_draw(const std::vector<double>& cumulative,
                             std::mt19937_64& gen) {
    double r = canonical_double(gen) * cumulative.back();
    std::size_t idx = static_cast<std::size_t>(
        std::upper_bound(cumulative.begin(), cumulative.end(), r) -
        cumulative.begin());
    // r == total can occur through rounding; clamp to the last entry.
    return std::min(idx, cumulative.size() - 1);
}

std::vector<std::size_t> draw(const SamplingDistribution& dist, std::size_t n,
                              std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<std::size_t> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(dist.entry_ids[categorical_draw(dist.cumulative, gen)]);
    return out;
}

} // namespace freqinfl
