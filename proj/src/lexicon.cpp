#include "freqinfl/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <tuple>

#include "freqinfl/errors.hpp"
#include "freqinfl/rng.hpp"
#include "freqinfl/tsv.hpp"
#include "freqinfl/unicode.hpp"

namespace freqinfl {

MorphTag make_tag(
    std::string_view upos,
    const std::vector<std::pair<std::string, std::string>>& feats) {
    std::string tag(upos);
    tag += '|';
    if (feats.empty()) {
        tag += '_';
        return tag;
    }
    std::vector<std::pair<std::string, std::string>> sorted = feats;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0) tag += '|';
        tag += sorted[i].first;
        tag += '=';
        tag += sorted[i].second;
    }
    return tag;
}

std::pair<std::string_view, std::string_view> split_tag(std::string_view tag) {
    std::size_t bar = tag.find('|');
    if (bar == std::string_view::npos) return {tag, std::string_view()};
    return {tag.substr(0, bar), tag.substr(bar + 1)};
}

bool entry_key_less(const LexEntry& a, const LexEntry& b) {
    return std::tie(a.lemma, a.tag, a.form) < std::tie(b.lemma, b.tag, b.form);
}

Lexicon::Lexicon(std::vector<LexEntry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), entry_key_less);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const LexEntry& e = entries_[i];
        if (e.count == 0)
            throw DataError("entry '" + e.lemma + "\t" + e.tag + "\t" + e.form +
                            "' has count 0; counts must be positive");
        if (i > 0 && !entry_key_less(entries_[i - 1], e))
            throw DataError("duplicate entry '" + e.lemma + "\t" + e.tag +
                            "\t" + e.form + "'");
        token_mass_ += e.count;
    }
}

void Lexicon::merge(const Lexicon& other) {
    if (other.empty()) return;
    std::vector<LexEntry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    std::size_t i = 0, j = 0;
    while (i < entries_.size() && j < other.entries_.size()) {
        const LexEntry& a = entries_[i];
        const LexEntry& b = other.entries_[j];
        if (entry_key_less(a, b)) {
            merged.push_back(a);
            ++i;
        } else if (entry_key_less(b, a)) {
            merged.push_back(b);
            ++j;
        } else {
            merged.push_back(a);
            merged.back().count += b.count;
            ++i;
            ++j;
        }
    }
    merged.insert(merged.end(), entries_.begin() + i, entries_.end());
    merged.insert(merged.end(), other.entries_.begin() + j,
                  other.entries_.end());
    entries_ = std::move(merged);
    token_mass_ += other.token_mass_;
}

Lexicon lexicalize(const std::vector<Sentence>& sentences,
                   const FilterConfig& filter) {
    std::map<std::tuple<std::string, MorphTag, std::string>, std::uint64_t>
        counts;
    for (const Sentence& sentence : sentences) {
        for (const TokenRecord& tok : sentence) {
            if (tok.lemma.empty() || tok.lemma == "_" || tok.form.empty() ||
                tok.form == "_")
                continue;
            if (std::find(filter.drop_upos.begin(), filter.drop_upos.end(),
                          tok.upos) != filter.drop_upos.end())
                continue;
            std::string lemma = unicode::nfc(tok.lemma);
            std::string form = unicode::nfc(tok.form);
            if (filter.lowercase) {
                lemma = unicode::nfc(unicode::to_lower(lemma));
                form = unicode::nfc(unicode::to_lower(form));
            }
            MorphTag tag = make_tag(tok.upos, tok.feats);
            ++counts[{std::move(lemma), std::move(tag), std::move(form)}];
        }
    }
    std::vector<LexEntry> entries;
    entries.reserve(counts.size());
    for (const auto& [key, count] : counts)
        entries.push_back(LexEntry{std::get<0>(key), std::get<1>(key),
                                   std::get<2>(key), count});
    return Lexicon(std::move(entries));
}

std::string to_tsv(const Lexicon& lexicon) {
    std::string out = "lemma\ttag\tform\tcount\n";
    for (const LexEntry& e : lexicon.entries()) {
        out += e.lemma;
        out += '\t';
        out += e.tag;
        out += '\t';
        out += e.form;
        out += '\t';
        out += std::to_string(e.count);
        out += '\n';
    }
    return out;
}

void write_lexicon(const std::string& path, const Lexicon& lexicon) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    out << to_tsv(lexicon);
    if (!out) throw DataError("failed writing '" + path + "'");
}

Lexicon read_lexicon(std::istream& in, const std::string& source_name) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t offset = 0;
    std::vector<LexEntry> entries;
    bool saw_header = false;

    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t line_start = offset;
        offset += line.size() + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!saw_header) {
            if (line != "lemma\ttag\tform\tcount")
                throw ParseError(source_name, line_no, line_start,
                                 "missing lexicon header "
                                 "'lemma<TAB>tag<TAB>form<TAB>count'");
            saw_header = true;
            continue;
        }
        if (line.empty()) continue; // tolerate a trailing blank line
        if (!unicode::is_valid_utf8(line))
            throw ParseError(source_name, line_no, line_start, "invalid UTF-8");
        std::vector<std::string_view> cols = tsv::split(line);
        if (cols.size() != 4)
            throw ParseError(source_name, line_no, line_start,
                             "expected 4 tab-separated columns, got " +
                                 std::to_string(cols.size()));
        if (cols[0].empty() || cols[1].empty() || cols[2].empty())
            throw ParseError(source_name, line_no, line_start,
                             "empty lemma, tag or form");
        if (cols[1].find('|') == std::string_view::npos ||
            cols[1].front() == '|')
            throw ParseError(source_name, line_no, line_start,
                             "tag '" + std::string(cols[1]) +
                                 "' is not in UPOS|FEATS form");
        std::uint64_t count = 0;
        auto [end, ec] = std::from_chars(cols[3].data(),
                                         cols[3].data() + cols[3].size(), count);
        if (ec != std::errc() || end != cols[3].data() + cols[3].size() ||
            count == 0)
            throw ParseError(source_name, line_no, line_start,
                             "count '" + std::string(cols[3]) +
                                 "' is not a positive integer");
        entries.push_back(LexEntry{std::string(cols[0]), std::string(cols[1]),
                                   std::string(cols[2]), count});
    }
    if (!saw_header)
        throw ParseError(source_name, 1, 0, "empty lexicon file (no header)");
    try {
        return Lexicon(std::move(entries));
    } catch (const DataError& e) {
        throw DataError(source_name + ": " + e.what());
    }
}

Lexicon read_lexicon_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    return read_lexicon(in, path);
}

std::string lexicon_digest(const Lexicon& lexicon) {
    std::uint64_t h = fnv1a64(to_tsv(lexicon));
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

} // namespace freqinfl
