#ifndef FREQINFL_LEXICON_HPP
#define FREQINFL_LEXICON_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freqinfl/conllu.hpp"

namespace freqinfl {

// A morphological tag in canonical string form: UPOS and the serialized
// feature bundle joined by '|', features sorted by key, "_" when empty.
// Examples: "ADV|Degree=Sup", "NOUN|Case=Nom|Number=Sing", "PUNCT|_".
using MorphTag = std::string;

MorphTag make_tag(std::string_view upos,
                  const std::vector<std::pair<std::string, std::string>>& feats);

/// Splits a canonical tag at the first '|' into (upos, feature string).
std::pair<std::string_view, std::string_view> split_tag(std::string_view tag);

/// One lemma-tag-form triple with its corpus occurrence count.
struct LexEntry {
    std::string lemma;
    MorphTag tag;
    std::string form;
    std::uint64_t count = 0;

    friend bool operator==(const LexEntry&, const LexEntry&) = default;
};

/// Byte order on (lemma, tag, form); the canonical serialization order.
bool entry_key_less(const LexEntry& a, const LexEntry& b);

/// A frequency-annotated set of unique (lemma, tag, form) triples, kept
/// sorted by entry key. token_mass holds the total occurrence count and
/// type_count the number of unique triples.
class Lexicon {
public:
    Lexicon() = default;
    /// Sorts the given entries and validates uniqueness and positive counts.
    explicit Lexicon(std::vector<LexEntry> entries);

    const std::vector<LexEntry>& entries() const { return entries_; }
    std::uint64_t token_mass() const { return token_mass_; }
    std::size_t type_count() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// Adds another lexicon's entries, summing counts of equal triples.
    void merge(const Lexicon& other);

    friend bool operator==(const Lexicon&, const Lexicon&) = default;

private:
    std::vector<LexEntry> entries_;
    std::uint64_t token_mass_ = 0;
};

struct FilterConfig {
    bool lowercase = false;
    std::vector<std::string> drop_upos; // UPOS classes to exclude
};

/// Aggregates parsed sentences into a Lexicon. Tokens whose lemma or form
/// is "_" or empty are dropped, as are tokens with a listed UPOS. Lemma and
/// form are NFC-normalized (and lowercased when requested); the result may
/// be empty if everything was filtered.
Lexicon lexicalize(const std::vector<Sentence>& sentences,
                   const FilterConfig& filter);

/// Canonical TSV serialization: header "lemma\ttag\tform\tcount", sorted
/// rows, LF line endings.
std::string to_tsv(const Lexicon& lexicon);
void write_lexicon(const std::string& path, const Lexicon& lexicon);

Lexicon read_lexicon(std::istream& in, const std::string& source_name);
Lexicon read_lexicon_file(const std::string& path);

/// FNV-1a over the canonical TSV bytes, as "fnv1a64:<16 hex digits>".
std::string lexicon_digest(const Lexicon& lexicon);

} // namespace freqinfl

#endif // FREQINFL_LEXICON_HPP
