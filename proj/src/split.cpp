#include "freqinfl/split.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <string_view>

#include "freqinfl/errors.hpp"
#include "freqinfl/rng.hpp"
#include "freqinfl/sampling.hpp"

namespace freqinfl {

namespace {

// value = digits interpreted over a power of ten, e.g. "0.25" -> 25/100.
struct DecimalPart {
    std::uint64_t scaled = 0;
    unsigned frac_digits = 0;
};

DecimalPart parse_decimal_part(std::string_view part,
                               const std::string& text) {
    DecimalPart out;
    bool seen_digit = false;
    bool seen_dot = false;
    for (char c : part) {
        if (c == '.') {
            if (seen_dot)
                throw UsageError("bad ratio component '" + std::string(part) +
                                 "' in '" + text + "'");
            seen_dot = true;
            continue;
        }
        if (c < '0' || c > '9')
            throw UsageError("bad ratio component '" + std::string(part) +
                             "' in '" + text + "'");
        seen_digit = true;
        out.scaled = out.scaled * 10 + static_cast<std::uint64_t>(c - '0');
        if (seen_dot) ++out.frac_digits;
    }
    if (!seen_digit || part.size() > 10)
        throw UsageError("bad ratio component '" + std::string(part) +
                         "' in '" + text + "'");
    return out;
}

std::uint64_t pow10(unsigned n) {
    std::uint64_t p = 1;
    while (n--) p *= 10;
    return p;
}

// True iff accumulated/total >= fraction, evaluated exactly.
bool reached(std::uint64_t accumulated, std::uint64_t total,
             const Fraction& fraction) {
    return static_cast<unsigned __int128>(accumulated) * fraction.den >=
           static_cast<unsigned __int128>(fraction.num) * total;
}

// True iff mass/total > fraction (strict), evaluated exactly.
bool exceeds(std::uint64_t mass, std::uint64_t total,
             const Fraction& fraction) {
    return static_cast<unsigned __int128>(mass) * fraction.den >
           static_cast<unsigned __int128>(fraction.num) * total;
}

std::size_t count_lemmas(const Lexicon& lex) {
    std::size_t n = 0;
    const std::string* prev = nullptr;
    for (const LexEntry& e : lex.entries()) {
        if (prev == nullptr || e.lemma != *prev) ++n;
        prev = &e.lemma;
    }
    return n;
}

} // namespace

std::array<Fraction, 3> parse_ratios(const std::string& text) {
    std::vector<std::string_view> parts;
    std::string_view rest = text;
    while (true) {
        std::size_t colon = rest.find(':');
        if (colon == std::string_view::npos) {
            parts.push_back(rest);
            break;
        }
        parts.push_back(rest.substr(0, colon));
        rest = rest.substr(colon + 1);
    }
    if (parts.size() != 3)
        throw UsageError("ratios must have 3 colon-separated components, got '" +
                         text + "'");

    std::array<DecimalPart, 3> decimals;
    unsigned max_frac = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        decimals[i] = parse_decimal_part(parts[i], text);
        max_frac = std::max(max_frac, decimals[i].frac_digits);
    }
    std::array<std::uint64_t, 3> scaled;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        scaled[i] =
            decimals[i].scaled * pow10(max_frac - decimals[i].frac_digits);
        if (scaled[i] == 0)
            throw UsageError("ratio components must be positive in '" + text +
                             "'");
        total += scaled[i];
    }
    std::array<Fraction, 3> fractions;
    for (std::size_t i = 0; i < 3; ++i) {
        std::uint64_t g = std::gcd(scaled[i], total);
        fractions[i] = Fraction{scaled[i] / g, total / g};
    }
    return fractions;
}

std::vector<LemmaGroup> group_by_lemma(const Lexicon& lexicon) {
    if (lexicon.empty())
        throw DataError("cannot group an empty lexicon by lemma");
    std::vector<LemmaGroup> groups;
    for (const LexEntry& e : lexicon.entries()) {
        if (groups.empty() || groups.back().lemma != e.lemma) {
            groups.push_back(LemmaGroup{e.lemma, {}, 0});
        }
        groups.back().entries.push_back(e);
        groups.back().mass += e.count;
    }
    return groups;
}

DataSplit split_lexicon(const Lexicon& lexicon, const SplitConfig& config) {
    std::vector<LemmaGroup> groups = group_by_lemma(lexicon);
    if (groups.size() < 3)
        throw DataError("insufficient lemmas: a split needs at least 3 "
                        "distinct lemmas, got " +
                        std::to_string(groups.size()));

    const std::uint64_t total_mass = lexicon.token_mass();
    const Fraction& train_frac = config.fractions[0];
    const Fraction& dev_frac = config.fractions[1];

    DataSplit split;
    for (const LemmaGroup& g : groups)
        if (exceeds(g.mass, total_mass, train_frac))
            split.warnings.push_back(
                "lemma '" + g.lemma + "' (mass " + std::to_string(g.mass) +
                ") alone exceeds the train mass target; overshoot accepted");

    std::mt19937_64 gen(derive_seed(config.seed, "split"));
    std::vector<std::size_t> alive(groups.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;

    // Renormalized sequential draws: pick one remaining group with
    // probability proportional to its weight, remove it, repeat until the
    // phase's mass target is first reached (overshoot accepted).
    auto draw_phase = [&](std::vector<LexEntry>& sink, const Fraction& frac,
                          bool weighted) {
        std::uint64_t accumulated = 0;
        std::vector<double> cumulative;
        while (!alive.empty() && !reached(accumulated, total_mass, frac)) {
            cumulative.clear();
            cumulative.reserve(alive.size());
            double running = 0.0;
            for (std::size_t idx : alive) {
                running += weighted ? static_cast<double>(groups[idx].mass)
                                    : 1.0;
                cumulative.push_back(running);
            }
            std::size_t pick = categorical_draw(cumulative, gen);
            const LemmaGroup& g = groups[alive[pick]];
            sink.insert(sink.end(), g.entries.begin(), g.entries.end());
            accumulated += g.mass;
            alive[pick] = alive.back();
            alive.pop_back();
        }
        return accumulated;
    };

    std::vector<LexEntry> train_entries, dev_entries, test_entries;
    draw_phase(train_entries, train_frac, /*weighted=*/true);
    std::uint64_t dev_mass = draw_phase(dev_entries, dev_frac,
                                        /*weighted=*/false);
    for (std::size_t idx : alive) {
        const LemmaGroup& g = groups[idx];
        test_entries.insert(test_entries.end(), g.entries.begin(),
                            g.entries.end());
    }

    if (dev_entries.empty())
        split.warnings.push_back(
            "dev split is empty (train consumed all lemma groups)");
    else if (!reached(dev_mass, total_mass, dev_frac))
        split.warnings.push_back(
            "dev split fell short of its mass target (remaining groups ran "
            "out)");
    if (test_entries.empty())
        split.warnings.push_back("test split is empty");

    split.train = Lexicon(std::move(train_entries));
    split.dev = Lexicon(std::move(dev_entries));
    split.test = Lexicon(std::move(test_entries));
    return split;
}

void write_split(const std::string& dir, const DataSplit& split,
                 const SplitConfig& config, const std::string& source_digest) {
    std::filesystem::create_directories(dir);
    const std::filesystem::path base(dir);
    write_lexicon((base / "train.tsv").string(), split.train);
    write_lexicon((base / "dev.tsv").string(), split.dev);
    write_lexicon((base / "test.tsv").string(), split.test);

    std::ofstream meta(base / "split-meta.txt", std::ios::binary);
    if (!meta) throw DataError("cannot write split-meta.txt in '" + dir + "'");
    const std::uint64_t total = split.train.token_mass() +
                                split.dev.token_mass() +
                                split.test.token_mass();
    meta << "seed=" << config.seed << "\n"
         << "ratios=" << config.ratios_text << "\n"
         << "train_fraction=" << config.fractions[0].num << "/"
         << config.fractions[0].den << "\n"
         << "dev_fraction=" << config.fractions[1].num << "/"
         << config.fractions[1].den << "\n"
         << "test_fraction=" << config.fractions[2].num << "/"
         << config.fractions[2].den << "\n"
         << "rng=" << kRngName << "\n"
         << "source_digest=" << source_digest << "\n"
         << "token_mass=" << total << "\n"
         << "train_mass=" << split.train.token_mass() << "\n"
         << "dev_mass=" << split.dev.token_mass() << "\n"
         << "test_mass=" << split.test.token_mass() << "\n"
         << "train_types=" << split.train.type_count() << "\n"
         << "dev_types=" << split.dev.type_count() << "\n"
         << "test_types=" << split.test.type_count() << "\n"
         << "train_lemmas=" << count_lemmas(split.train) << "\n"
         << "dev_lemmas=" << count_lemmas(split.dev) << "\n"
         << "test_lemmas=" << count_lemmas(split.test) << "\n";
    for (const std::string& w : split.warnings) meta << "warning=" << w << "\n";
    if (!meta) throw DataError("failed writing split-meta.txt in '" + dir + "'");
}

DataSplit read_split(const std::string& dir) {
    const std::filesystem::path base(dir);
    DataSplit split;
    split.train = read_lexicon_file((base / "train.tsv").string());
    split.dev = read_lexicon_file((base / "dev.tsv").string());
    split.test = read_lexicon_file((base / "test.tsv").string());
    return split;
}

} // namespace freqinfl
