#include "freqinfl/metrics.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <tuple>

#include "freqinfl/errors.hpp"
#include "freqinfl/tsv.hpp"
#include "freqinfl/unicode.hpp"

namespace freqinfl {

namespace {

using Key = std::pair<std::string, MorphTag>; // (lemma, tag)

std::string key_text(const Key& k) { return k.first + "/" + k.second; }

// "a/NOUN|_, b/VERB|_ and 3 more"
std::string list_keys(const std::vector<Key>& keys) {
    std::string out;
    const std::size_t shown = std::min<std::size_t>(keys.size(), 5);
    for (std::size_t i = 0; i < shown; ++i) {
        if (i > 0) out += ", ";
        out += key_text(keys[i]);
    }
    if (keys.size() > shown)
        out += " and " + std::to_string(keys.size() - shown) + " more";
    return out;
}

} // namespace

EvalOutcome evaluate(const std::vector<Prediction>& predictions,
                     const Lexicon& gold) {
    if (gold.empty())
        throw DataError("cannot evaluate against an empty gold lexicon");

    std::map<Key, const Prediction*> by_key;
    std::vector<Key> duplicates;
    for (const Prediction& p : predictions) {
        auto [it, inserted] = by_key.try_emplace(Key{p.lemma, p.tag}, &p);
        if (!inserted) duplicates.push_back(it->first);
    }
    if (!duplicates.empty())
        throw DataError("duplicate predictions for " + list_keys(duplicates));

    std::set<Key> gold_keys;
    std::vector<Key> missing;
    for (const LexEntry& e : gold.entries()) {
        Key key{e.lemma, e.tag};
        if (gold_keys.insert(key).second && by_key.find(key) == by_key.end())
            missing.push_back(std::move(key));
    }
    if (!missing.empty())
        throw DataError("missing predictions for " + list_keys(missing));
    if (by_key.size() > gold_keys.size()) {
        std::vector<Key> extras;
        for (const auto& [key, p] : by_key)
            if (gold_keys.find(key) == gold_keys.end()) extras.push_back(key);
        throw DataError("predictions for keys absent from the gold lexicon: " +
                        list_keys(extras));
    }

    EvalOutcome out;
    for (const LexEntry& e : gold.entries()) {
        const Prediction* p = by_key.at(Key{e.lemma, e.tag});
        ++out.item_total;
        out.token_total += e.count;
        if (unicode::nfc(p->form) == unicode::nfc(e.form)) {
            ++out.correct_items;
            out.correct_tokens += e.count;
        }
    }
    out.type_accuracy = static_cast<double>(out.correct_items) /
                        static_cast<double>(out.item_total);
    out.token_accuracy = static_cast<double>(out.correct_tokens) /
                         static_cast<double>(out.token_total);
    return out;
}

std::pair<double, double> macro_average(
    const std::vector<EvalOutcome>& outcomes) {
    if (outcomes.empty())
        throw DataError("macro average of an empty outcome list");
    double type_sum = 0.0, token_sum = 0.0;
    for (const EvalOutcome& o : outcomes) {
        type_sum += o.type_accuracy;
        token_sum += o.token_accuracy;
    }
    const double n = static_cast<double>(outcomes.size());
    return {type_sum / n, token_sum / n};
}

std::string predictions_to_tsv(const std::vector<Prediction>& predictions) {
    std::vector<const Prediction*> sorted;
    sorted.reserve(predictions.size());
    for (const Prediction& p : predictions) sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(),
              [](const Prediction* a, const Prediction* b) {
                  return std::tie(a->lemma, a->tag) < std::tie(b->lemma, b->tag);
              });
    std::string out = "lemma\ttag\tform\n";
    for (const Prediction* p : sorted) {
        out += p->lemma;
        out += '\t';
        out += p->tag;
        out += '\t';
        out += p->form;
        out += '\n';
    }
    return out;
}

void write_predictions(const std::string& path,
                       const std::vector<Prediction>& predictions) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    out << predictions_to_tsv(predictions);
    if (!out) throw DataError("failed writing '" + path + "'");
}

std::vector<Prediction> read_predictions(std::istream& in,
                                         const std::string& source_name) {
    std::vector<Prediction> predictions;
    std::string line;
    std::size_t line_no = 0;
    std::size_t offset = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t line_start = offset;
        offset += line.size() + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!saw_header) {
            if (line != "lemma\ttag\tform")
                throw ParseError(source_name, line_no, line_start,
                                 "missing predictions header "
                                 "'lemma<TAB>tag<TAB>form'");
            saw_header = true;
            continue;
        }
        if (line.empty()) continue;
        if (!unicode::is_valid_utf8(line))
            throw ParseError(source_name, line_no, line_start, "invalid UTF-8");
        std::vector<std::string_view> cols = tsv::split(line);
        if (cols.size() != 3)
            throw ParseError(source_name, line_no, line_start,
                             "expected 3 tab-separated columns, got " +
                                 std::to_string(cols.size()));
        if (cols[0].empty() || cols[1].empty() || cols[2].empty())
            throw ParseError(source_name, line_no, line_start,
                             "empty lemma, tag or form");
        predictions.push_back(Prediction{std::string(cols[0]),
                                         std::string(cols[1]),
                                         std::string(cols[2])});
    }
    if (!saw_header)
        throw ParseError(source_name, 1, 0,
                         "empty predictions file (no header)");
    return predictions;
}

std::vector<Prediction> read_predictions_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    return read_predictions(in, path);
}

} // namespace freqinfl
