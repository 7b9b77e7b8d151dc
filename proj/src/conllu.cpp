#include "freqinfl/conllu.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <string>
#include <string_view>

#include "freqinfl/errors.hpp"
#include "freqinfl/tsv.hpp"
#include "freqinfl/unicode.hpp"

namespace freqinfl {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return c >= '0' && c <= '9';
    });
}

std::vector<std::pair<std::string, std::string>> parse_feats(
    std::string_view feats, const std::string& source, std::size_t line_no,
    std::size_t offset) {
    std::vector<std::pair<std::string, std::string>> pairs;
    if (feats == "_") return pairs;
    std::size_t start = 0;
    while (start <= feats.size()) {
        std::size_t bar = feats.find('|', start);
        std::string_view item =
            bar == std::string_view::npos
                ? feats.substr(start)
                : feats.substr(start, bar - start);
        // Values may themselves contain '=', so split at the first one only.
        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size())
            throw ParseError(source, line_no, offset,
                             "malformed FEATS item '" + std::string(item) + "'");
        pairs.emplace_back(std::string(item.substr(0, eq)),
                           std::string(item.substr(eq + 1)));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i)
        if (pairs[i].first == pairs[i - 1].first)
            throw ParseError(source, line_no, offset,
                             "duplicate feature key '" + pairs[i].first + "'");
    return pairs;
}

} // namespace

std::vector<Sentence> parse_conllu(std::istream& in,
                                   const std::string& source_name) {
    std::vector<Sentence> sentences;
    Sentence current;
    std::string line;
    std::size_t line_no = 0;
    std::size_t offset = 0;

    auto flush = [&] {
        if (!current.empty()) {
            sentences.push_back(std::move(current));
            current.clear();
        }
    };

    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t line_start = offset;
        offset += line.size() + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        if (line.empty()) {
            flush();
            continue;
        }
        if (line[0] == '#') continue;
        if (!unicode::is_valid_utf8(line))
            throw ParseError(source_name, line_no, line_start, "invalid UTF-8");

        std::vector<std::string_view> cols = tsv::split(line);
        if (cols.size() != 10)
            throw ParseError(source_name, line_no, line_start,
                             "expected 10 tab-separated columns, got " +
                                 std::to_string(cols.size()));
        for (const std::string_view& col : cols)
            if (col.empty())
                throw ParseError(source_name, line_no, line_start,
                                 "empty column (use '_' for missing values)");

        std::string_view id = cols[0];
        if (id.find('-') != std::string_view::npos) continue; // multiword range
        if (id.find('.') != std::string_view::npos) continue; // empty node
        if (!all_digits(id))
            throw ParseError(source_name, line_no, line_start,
                             "invalid token ID '" + std::string(id) + "'");

        TokenRecord tok;
        tok.form = std::string(cols[1]);
        tok.lemma = std::string(cols[2]);
        tok.upos = std::string(cols[3]);
        tok.feats = parse_feats(cols[5], source_name, line_no, line_start);
        current.push_back(std::move(tok));
    }
    flush();
    return sentences;
}

std::vector<Sentence> parse_conllu_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    return parse_conllu(in, path);
}

} // namespace freqinfl
