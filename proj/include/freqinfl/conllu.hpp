#ifndef FREQINFL_CONLLU_HPP
#define FREQINFL_CONLLU_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace freqinfl {

/// One syntactic-word line of a CoNLL-U file, reduced to the fields the
/// inflection task consumes. Feature pairs are sorted by key.
struct TokenRecord {
    std::string form;
    std::string lemma;
    std::string upos;
    std::vector<std::pair<std::string, std::string>> feats;

    friend bool operator==(const TokenRecord&, const TokenRecord&) = default;
};

using Sentence = std::vector<TokenRecord>;

/// Parses CoNLL-U text: '#' comment lines are ignored, blank lines separate
/// sentences, multiword ranges (ID containing '-') and empty nodes (ID
/// containing '.') are skipped. Throws ParseError carrying line number and
/// byte offset on malformed input; source_name labels error messages.
std::vector<Sentence> parse_conllu(std::istream& in,
                                   const std::string& source_name);

std::vector<Sentence> parse_conllu_file(const std::string& path);

} // namespace freqinfl

#endif // FREQINFL_CONLLU_HPP
