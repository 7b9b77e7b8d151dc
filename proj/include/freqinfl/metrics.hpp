#ifndef FREQINFL_METRICS_HPP
#define FREQINFL_METRICS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "freqinfl/lexicon.hpp"

namespace freqinfl {

/// The predicted form for one (lemma, tag) key. Gold rows that share a
/// (lemma, tag) key (free-variation forms) are scored against the single
/// prediction for that key, so a prediction can match at most one of them.
struct Prediction {
    std::string lemma;
    MorphTag tag;
    std::string form;

    friend bool operator==(const Prediction&, const Prediction&) = default;
};

struct EvalOutcome {
    double type_accuracy = 0.0;  // correct items / total items
    double token_accuracy = 0.0; // correct occurrences / total occurrences
    std::uint64_t item_total = 0;
    std::uint64_t token_total = 0;
    std::uint64_t correct_items = 0;
    std::uint64_t correct_tokens = 0;

    friend bool operator==(const EvalOutcome&, const EvalOutcome&) = default;
};

/// Scores predictions against a gold lexicon. Forms are compared by byte
/// equality after NFC normalization of both sides. Throws DataError when a
/// gold (lemma, tag) key has no prediction, a key is predicted twice, or a
/// prediction has no gold key (coverage errors listing offending keys).
EvalOutcome evaluate(const std::vector<Prediction>& predictions,
                     const Lexicon& gold);

/// Unweighted arithmetic means of (type, token) accuracies.
std::pair<double, double> macro_average(const std::vector<EvalOutcome>& outcomes);

/// Predictions TSV: header "lemma\ttag\tform", one row per (lemma, tag) key,
/// sorted, LF endings.
std::string predictions_to_tsv(const std::vector<Prediction>& predictions);
void write_predictions(const std::string& path,
                       const std::vector<Prediction>& predictions);
std::vector<Prediction> read_predictions(std::istream& in,
                                         const std::string& source_name);
std::vector<Prediction> read_predictions_file(const std::string& path);

} // namespace freqinfl

#endif // FREQINFL_METRICS_HPP
