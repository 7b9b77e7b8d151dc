#include "freqinfl/inflect.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>

#include "freqinfl/errors.hpp"
#include "freqinfl/sampling.hpp"
#include "freqinfl/tsv.hpp"
#include "freqinfl/unicode.hpp"

namespace freqinfl {

std::string CopyModel::predict(std::string_view lemma,
                               const MorphTag& /*tag*/) const {
    return std::string(lemma);
}

std::vector<std::pair<std::string, std::string>> extract_rules(
    std::string_view lemma, std::string_view form, int context_window) {
    const std::size_t p = unicode::common_prefix_bytes(lemma, form);
    std::vector<std::pair<std::string, std::string>> rules;
    rules.emplace_back(std::string(lemma.substr(p)), std::string(form.substr(p)));
    // Back-off variants keep 1..context_window code points of the shared
    // prefix as left context, making the rule more specific.
    const std::vector<std::size_t> offsets =
        unicode::codepoint_offsets(lemma.substr(0, p));
    const std::size_t prefix_cps = offsets.size() - 1;
    const std::size_t max_context =
        std::min<std::size_t>(prefix_cps,
                              context_window < 0 ? 0 : context_window);
    for (std::size_t k = 1; k <= max_context; ++k) {
        const std::size_t start = offsets[prefix_cps - k];
        rules.emplace_back(std::string(lemma.substr(start)),
                           std::string(form.substr(start)));
    }
    return rules;
}

RuleModel RuleModel::fit(const Lexicon& train, double tau, FitMode mode,
                         std::uint64_t seed, std::uint64_t n_draws,
                         int context_window) {
    if (train.empty())
        throw DataError("cannot fit a rule model on an empty lexicon");

    const std::vector<LexEntry>& entries = train.entries();
    std::vector<double> entry_votes(entries.size(), 0.0);
    if (mode == FitMode::kExpectation) {
        std::vector<std::uint64_t> counts;
        counts.reserve(entries.size());
        for (const LexEntry& e : entries) counts.push_back(e.count);
        entry_votes = compute_weights(counts, tau);
    } else {
        if (n_draws == 0) n_draws = train.token_mass(); // one corpus pass
        SamplingDistribution dist = distribution(train, tau);
        for (std::size_t id : draw(dist, n_draws, seed))
            entry_votes[id] += 1.0;
    }

    std::map<std::pair<MorphTag, std::string>, std::map<std::string, double>>
        candidates;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entry_votes[i] == 0.0) continue;
        const LexEntry& e = entries[i];
        for (auto& [lemma_suffix, form_suffix] :
             extract_rules(e.lemma, e.form, context_window))
            candidates[{e.tag, std::move(lemma_suffix)}]
                      [std::move(form_suffix)] += entry_votes[i];
    }

    RuleModel model;
    for (const auto& [key, options] : candidates) {
        const std::string* best_form = nullptr;
        double best_vote = 0.0;
        for (const auto& [form_suffix, vote] : options) {
            const bool wins =
                best_form == nullptr || vote > best_vote ||
                (vote == best_vote &&
                 (form_suffix.size() < best_form->size() ||
                  (form_suffix.size() == best_form->size() &&
                   form_suffix < *best_form)));
            if (wins) {
                best_form = &form_suffix;
                best_vote = vote;
            }
        }
        model.rules_.emplace(key,
                             SuffixRule{key.second, *best_form, best_vote});
    }
    return model;
}

std::string RuleModel::predict(std::string_view lemma,
                               const MorphTag& tag) const {
    if (unicode::is_valid_utf8(lemma)) {
        // Longest matching lemma_suffix first; offsets enumerate all code
        // point aligned suffixes from the whole lemma down to "".
        for (std::size_t start : unicode::codepoint_offsets(lemma)) {
            auto it = rules_.find({tag, std::string(lemma.substr(start))});
            if (it != rules_.end())
                return std::string(lemma.substr(0, start)) +
                       it->second.form_suffix;
        }
    } else {
        auto it = rules_.find({tag, std::string()});
        if (it != rules_.end())
            return std::string(lemma) + it->second.form_suffix;
    }
    return std::string(lemma); // copy fallback
}

std::string RuleModel::to_tsv() const {
    std::string out = "tag\tlemma_suffix\tform_suffix\tvote\n";
    for (const auto& [key, rule] : rules_) {
        out += key.first;
        out += '\t';
        out += rule.lemma_suffix;
        out += '\t';
        out += rule.form_suffix;
        out += '\t';
        out += tsv::format_full(rule.vote);
        out += '\n';
    }
    return out;
}

void RuleModel::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    out << to_tsv();
    if (!out) throw DataError("failed writing '" + path + "'");
}

RuleModel RuleModel::read_tsv(std::istream& in,
                              const std::string& source_name) {
    RuleModel model;
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
            if (line != "tag\tlemma_suffix\tform_suffix\tvote")
                throw ParseError(source_name, line_no, line_start,
                                 "missing model header "
                                 "'tag<TAB>lemma_suffix<TAB>form_suffix"
                                 "<TAB>vote'");
            saw_header = true;
            continue;
        }
        if (line.empty()) continue;
        if (!unicode::is_valid_utf8(line))
            throw ParseError(source_name, line_no, line_start, "invalid UTF-8");
        std::vector<std::string_view> cols = tsv::split(line);
        if (cols.size() != 4)
            throw ParseError(source_name, line_no, line_start,
                             "expected 4 tab-separated columns, got " +
                                 std::to_string(cols.size()));
        if (cols[0].empty() || cols[0].find('|') == std::string_view::npos)
            throw ParseError(source_name, line_no, line_start,
                             "tag '" + std::string(cols[0]) +
                                 "' is not in UPOS|FEATS form");
        double vote = 0.0;
        auto [end, ec] =
            std::from_chars(cols[3].data(), cols[3].data() + cols[3].size(),
                            vote);
        if (ec != std::errc() || end != cols[3].data() + cols[3].size() ||
            !std::isfinite(vote) || vote <= 0.0)
            throw ParseError(source_name, line_no, line_start,
                             "vote '" + std::string(cols[3]) +
                                 "' is not a positive finite number");
        auto [it, inserted] = model.rules_.emplace(
            std::pair<MorphTag, std::string>{std::string(cols[0]),
                                             std::string(cols[1])},
            SuffixRule{std::string(cols[1]), std::string(cols[2]), vote});
        if (!inserted)
            throw ParseError(source_name, line_no, line_start,
                             "duplicate rule key '" + std::string(cols[0]) +
                                 "', '" + std::string(cols[1]) + "'");
    }
    if (!saw_header)
        throw ParseError(source_name, 1, 0, "empty model file (no header)");
    return model;
}

RuleModel RuleModel::read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    return read_tsv(in, path);
}

} // namespace freqinfl
