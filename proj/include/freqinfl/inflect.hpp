#ifndef FREQINFL_INFLECT_HPP
#define FREQINFL_INFLECT_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freqinfl/lexicon.hpp"

namespace freqinfl {

/// An inflection system: total and deterministic once constructed/fitted.
class InflectionModel {
public:
    virtual ~InflectionModel() = default;
    virtual std::string predict(std::string_view lemma,
                                const MorphTag& tag) const = 0;
};

/// Returns the lemma unchanged.
class CopyModel : public InflectionModel {
public:
    std::string predict(std::string_view lemma,
                        const MorphTag& tag) const override;
};

/// A suffix rewrite rule: for lemmas ending in lemma_suffix (under one tag),
/// replace that ending with form_suffix. Votes hold the temperature-weighted
/// evidence mass the rule collected during fitting.
struct SuffixRule {
    std::string lemma_suffix;
    std::string form_suffix;
    double vote = 0.0;
};

/// (lemma_suffix, form_suffix) candidates one training pair generates: the
/// longest-common-prefix rule plus back-off variants whose context extends
/// left by 1..context_window code points of the shared prefix.
std::vector<std::pair<std::string, std::string>> extract_rules(
    std::string_view lemma, std::string_view form, int context_window = 3);

enum class FitMode { kExpectation, kSampled };

/// Deterministic frequency-aware learner: every training entry casts votes
/// for the rules it generates; the winner per (tag, lemma_suffix) key is the
/// max-vote form_suffix (ties: shorter form_suffix, then lexicographically
/// smaller). Prediction applies the matching rule with the longest
/// lemma_suffix for the tag and falls back to copying the lemma.
class RuleModel : public InflectionModel {
public:
    /// Expectation mode: each entry votes count^tau. Sampled mode: n_draws
    /// entries are drawn from the temperature distribution (with
    /// replacement, seeded) and each drawn instance votes 1.
    static RuleModel fit(const Lexicon& train, double tau, FitMode mode,
                         std::uint64_t seed = 0, std::uint64_t n_draws = 0,
                         int context_window = 3);

    std::string predict(std::string_view lemma,
                        const MorphTag& tag) const override;

    /// Winning rules keyed by (tag, lemma_suffix).
    const std::map<std::pair<MorphTag, std::string>, SuffixRule>& rules() const {
        return rules_;
    }

    /// TSV: header "tag\tlemma_suffix\tform_suffix\tvote", sorted rows,
    /// full-precision votes; read_tsv round-trips.
    std::string to_tsv() const;
    void write(const std::string& path) const;
    static RuleModel read_tsv(std::istream& in, const std::string& source_name);
    static RuleModel read_file(const std::string& path);

private:
    std::map<std::pair<MorphTag, std::string>, SuffixRule> rules_;
};

} // namespace freqinfl

#endif // FREQINFL_INFLECT_HPP
