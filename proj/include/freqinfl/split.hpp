#ifndef FREQINFL_SPLIT_HPP
#define FREQINFL_SPLIT_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "freqinfl/lexicon.hpp"

namespace freqinfl {

/// Exact split fraction; stopping tests use integer arithmetic so results
/// never depend on floating-point rounding.
struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Parses "8:1:1" or "0.8:0.1:0.1" into exact train/dev/test fractions of
/// the total (they sum to 1 by construction).
std::array<Fraction, 3> parse_ratios(const std::string& text);

struct SplitConfig {
    std::array<Fraction, 3> fractions{Fraction{8, 10}, Fraction{1, 10},
                                      Fraction{1, 10}};
    std::string ratios_text = "8:1:1"; // echoed into the metadata record
    std::uint64_t seed = 0;            // master seed; stage seed is derived
};

/// All entries of one lemma; the unit the splitter assigns whole.
struct LemmaGroup {
    std::string lemma;
    std::vector<LexEntry> entries;
    std::uint64_t mass = 0; // sum of entry counts
};

std::vector<LemmaGroup> group_by_lemma(const Lexicon& lexicon);

struct DataSplit {
    Lexicon train;
    Lexicon dev;
    Lexicon test;
    std::vector<std::string> warnings;
};

/// Frequency-weighted lemma-disjoint split: whole lemma groups are drawn
/// into train without replacement with probability proportional to group
/// mass until train mass first reaches train_fraction x token_mass
/// (overshoot accepted); dev is then filled by uniform draws until its mass
/// target; the remaining groups form test. Deterministic per seed. Throws
/// DataError when the lexicon has fewer than 3 lemma groups.
DataSplit split_lexicon(const Lexicon& lexicon, const SplitConfig& config);

/// Writes train.tsv, dev.tsv, test.tsv and split-meta.txt (line-oriented
/// key=value: seed, fractions, source digest, achieved masses, RNG name).
void write_split(const std::string& dir, const DataSplit& split,
                 const SplitConfig& config, const std::string& source_digest);

/// Reads the three lexicons back from a split directory.
DataSplit read_split(const std::string& dir);

} // namespace freqinfl

#endif // FREQINFL_SPLIT_HPP
