#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "freqinfl/errors.hpp"
#include "freqinfl/lexicon.hpp"
#include "freqinfl/split.hpp"

using namespace freqinfl;

namespace {

// One single-entry lemma group per (name, mass) pair.
Lexicon lexicon_of_masses(const std::vector<std::pair<std::string, std::uint64_t>>& groups) {
    std::vector<LexEntry> entries;
    for (const auto& [lemma, mass] : groups)
        entries.push_back(LexEntry{lemma, "NOUN|_", lemma + "s", mass});
    return Lexicon(std::move(entries));
}

std::set<std::string> lemma_set(const Lexicon& lex) {
    std::set<std::string> lemmas;
    for (const LexEntry& e : lex.entries()) lemmas.insert(e.lemma);
    return lemmas;
}

bool disjoint(const std::set<std::string>& a, const std::set<std::string>& b) {
    for (const std::string& x : a)
        if (b.count(x)) return false;
    return true;
}

bool contains_warning(const DataSplit& split, const std::string& needle) {
    for (const std::string& w : split.warnings)
        if (w.find(needle) != std::string::npos) return true;
    return false;
}

// Pseudo-random lexicon with n_lemmas single- or multi-entry groups.
Lexicon random_lexicon(std::mt19937_64& gen, int n_lemmas) {
    std::vector<LexEntry> entries;
    for (int i = 0; i < n_lemmas; ++i) {
        std::string lemma = "lemma" + std::to_string(i);
        int n_tags = 1 + static_cast<int>(gen() % 3);
        for (int t = 0; t < n_tags; ++t) {
            entries.push_back(LexEntry{
                lemma, "NOUN|Case=C" + std::to_string(t),
                lemma + "_f" + std::to_string(t), 1 + gen() % 50});
        }
    }
    return Lexicon(std::move(entries));
}

} // namespace

TEST_CASE("ratio parsing") {
    auto f = parse_ratios("8:1:1");
    CHECK(f[0] == Fraction{4, 5});
    CHECK(f[1] == Fraction{1, 10});
    CHECK(f[2] == Fraction{1, 10});

    CHECK(parse_ratios("0.8:0.1:0.1") == parse_ratios("8:1:1"));
    CHECK(parse_ratios("80:10:10") == parse_ratios("8:1:1"));

    auto g = parse_ratios("7:2:1");
    CHECK(g[0] == Fraction{7, 10});
    CHECK(g[1] == Fraction{1, 5});
    CHECK(g[2] == Fraction{1, 10});

    auto h = parse_ratios("2:1:1");
    CHECK(h[0] == Fraction{1, 2});
    CHECK(h[1] == Fraction{1, 4});

    CHECK_THROWS_AS(parse_ratios("8:1"), UsageError);
    CHECK_THROWS_AS(parse_ratios("8:1:1:1"), UsageError);
    CHECK_THROWS_AS(parse_ratios("0:1:1"), UsageError);
    CHECK_THROWS_AS(parse_ratios("a:1:1"), UsageError);
    CHECK_THROWS_AS(parse_ratios("1.2.3:1:1"), UsageError);
    CHECK_THROWS_AS(parse_ratios("::"), UsageError);
    CHECK_THROWS_AS(parse_ratios("8:1:0.00000000001"), UsageError);
}

TEST_CASE("three-group enumeration: outcome classes match exact probabilities") {
    // Masses 80/10/10 with an 8:1:1 split. Under mass-weighted draws the
    // train set is {A} w.p. 0.8, {X, A} for X in {B, C} w.p. 8/45, or all
    // three groups w.p. 1/45; each class forces a distinct warning pattern.
    Lexicon lex = lexicon_of_masses({{"alpha", 80}, {"beta", 10}, {"gamma", 10}});
    const int n = 2000;
    int only_a = 0, two_groups = 0, all_three = 0;

    for (int seed = 0; seed < n; ++seed) {
        SplitConfig config;
        config.seed = static_cast<std::uint64_t>(seed);
        DataSplit split = split_lexicon(lex, config);

        auto train = lemma_set(split.train);
        auto dev = lemma_set(split.dev);
        auto test = lemma_set(split.test);
        REQUIRE(train.count("alpha") == 1); // the heavy group always lands in train
        REQUIRE(disjoint(train, dev));
        REQUIRE(disjoint(train, test));
        REQUIRE(disjoint(dev, test));
        REQUIRE(train.size() + dev.size() + test.size() == 3);

        if (train.size() == 1) {
            ++only_a;
            CHECK(dev.size() == 1);
            CHECK(test.size() == 1);
            CHECK(split.warnings.empty());
        } else if (train.size() == 2) {
            ++two_groups;
            CHECK(dev.size() == 1);
            CHECK(contains_warning(split, "test split is empty"));
        } else {
            ++all_three;
            CHECK(contains_warning(split, "dev split is empty"));
            CHECK(contains_warning(split, "test split is empty"));
        }
    }

    auto within_3_sigma = [n](int observed, double p) {
        double sigma = std::sqrt(n * p * (1.0 - p));
        return std::abs(observed - n * p) <= 3.0 * sigma;
    };
    CHECK(within_3_sigma(only_a, 0.8));
    CHECK(within_3_sigma(two_groups, 8.0 / 45.0));
    CHECK(within_3_sigma(all_three, 1.0 / 45.0));
}

TEST_CASE("random lexicons: partition invariants hold") {
    std::mt19937_64 gen(20240813);
    int differing_seeds = 0;
    const int iterations = 1000;

    for (int i = 0; i < iterations; ++i) {
        int n_lemmas = 3 + static_cast<int>(gen() % 38);
        Lexicon lex = random_lexicon(gen, n_lemmas);

        SplitConfig config;
        config.seed = gen();
        DataSplit split = split_lexicon(lex, config);

        // Lemma-disjoint partition.
        auto train = lemma_set(split.train);
        auto dev = lemma_set(split.dev);
        auto test = lemma_set(split.test);
        REQUIRE(disjoint(train, dev));
        REQUIRE(disjoint(train, test));
        REQUIRE(disjoint(dev, test));

        // Entry conservation: merging the parts reproduces the input.
        Lexicon rebuilt = split.train;
        rebuilt.merge(split.dev);
        rebuilt.merge(split.test);
        REQUIRE(rebuilt == lex);

        // Stopping rule: train mass first reaches the exact target, so it
        // lies in [target, target + heaviest group).
        const std::uint64_t total = lex.token_mass();
        const Fraction frac = config.fractions[0];
        std::uint64_t heaviest = 0;
        for (const LemmaGroup& g : group_by_lemma(lex))
            heaviest = std::max(heaviest, g.mass);
        REQUIRE(split.train.token_mass() * frac.den >= frac.num * total);
        REQUIRE((split.train.token_mass() - heaviest) * frac.den <
                frac.num * total);

        // Same seed reproduces the split; a different seed usually differs.
        DataSplit again = split_lexicon(lex, config);
        REQUIRE(again.train == split.train);
        REQUIRE(again.dev == split.dev);
        REQUIRE(again.test == split.test);
        REQUIRE(again.warnings == split.warnings);

        SplitConfig other = config;
        other.seed = config.seed + 1;
        DataSplit changed = split_lexicon(lex, other);
        if (!(changed.train == split.train)) ++differing_seeds;
    }
    CHECK(differing_seeds > iterations / 3);
}

TEST_CASE("mass weighting biases the heavy group into train") {
    // Masses {30, 10 x 7} with a 5:3:2 split (train target 50). The chance
    // that the heavy group ends up in train has a closed form; the observed
    // frequency must match it, and it must exceed what uniform draws give.
    const std::uint64_t big = 30, small = 10;
    const int n_small = 7;
    const std::uint64_t target = 50;

    // P(heavy in train) by recursion over (heavy drawn?, smalls left, mass).
    auto dp = [&](auto&& self, bool big_in, int smalls, std::uint64_t acc,
                  bool weighted) -> double {
        if (acc >= target) return big_in ? 1.0 : 0.0;
        double w_big = big_in ? 0.0 : (weighted ? double(big) : 1.0);
        double w_small = smalls > 0 ? (weighted ? double(small) : 1.0) : 0.0;
        double total = w_big + smalls * w_small;
        double p = 0.0;
        if (w_big > 0)
            p += w_big / total * self(self, true, smalls, acc + big, weighted);
        if (smalls > 0)
            p += smalls * w_small / total *
                 self(self, big_in, smalls - 1, acc + small, weighted);
        return p;
    };
    const double p_weighted = dp(dp, false, n_small, 0, true);
    const double p_uniform = dp(dp, false, n_small, 0, false);
    CHECK(p_weighted > p_uniform + 0.05);

    std::vector<std::pair<std::string, std::uint64_t>> groups = {{"heavy", big}};
    for (int i = 0; i < n_small; ++i)
        groups.emplace_back("small" + std::to_string(i), small);
    Lexicon lex = lexicon_of_masses(groups);

    const int n = 4000;
    int heavy_in_train = 0;
    for (int seed = 0; seed < n; ++seed) {
        SplitConfig config;
        config.fractions = parse_ratios("5:3:2");
        config.seed = static_cast<std::uint64_t>(seed);
        DataSplit split = split_lexicon(lex, config);
        if (lemma_set(split.train).count("heavy")) ++heavy_in_train;
    }
    double sigma = std::sqrt(n * p_weighted * (1.0 - p_weighted));
    CHECK(std::abs(heavy_in_train - n * p_weighted) <= 3.0 * sigma);
}

TEST_CASE("a lemma group heavier than the train target is flagged") {
    Lexicon lex = lexicon_of_masses({{"whale", 100}, {"krill", 1}, {"plankton", 1}});
    DataSplit split = split_lexicon(lex, SplitConfig{});
    CHECK(contains_warning(split, "alone exceeds the train mass target"));
    Lexicon rebuilt = split.train;
    rebuilt.merge(split.dev);
    rebuilt.merge(split.test);
    CHECK(rebuilt == lex);
}

TEST_CASE("fewer than three lemma groups is an error") {
    Lexicon lex = lexicon_of_masses({{"one", 5}, {"two", 5}});
    try {
        split_lexicon(lex, SplitConfig{});
        FAIL("expected DataError");
    } catch (const DataError& e) {
        CHECK(std::string(e.what()).find("distinct lemmas") != std::string::npos);
    }
    CHECK_THROWS_AS(split_lexicon(Lexicon{}, SplitConfig{}), DataError);
}

TEST_CASE("split directory round-trips and records its metadata") {
    std::mt19937_64 gen(7);
    Lexicon lex = random_lexicon(gen, 20);
    SplitConfig config;
    config.fractions = parse_ratios("8:1:1");
    config.seed = 99;
    DataSplit split = split_lexicon(lex, config);

    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "freqinfl_split_roundtrip";
    fs::remove_all(dir);
    write_split(dir.string(), split, config, lexicon_digest(lex));

    DataSplit back = read_split(dir.string());
    CHECK(back.train == split.train);
    CHECK(back.dev == split.dev);
    CHECK(back.test == split.test);

    std::map<std::string, std::string> meta;
    std::ifstream in(dir / "split-meta.txt");
    REQUIRE(in.good());
    std::string line;
    while (std::getline(in, line)) {
        auto eq = line.find('=');
        REQUIRE(eq != std::string::npos);
        meta[line.substr(0, eq)] = line.substr(eq + 1);
    }
    CHECK(meta.at("seed") == "99");
    CHECK(meta.at("ratios") == "8:1:1");
    CHECK(meta.at("train_fraction") == "4/5");
    CHECK(meta.at("dev_fraction") == "1/10");
    CHECK(meta.at("rng") == "mt19937_64");
    CHECK(meta.at("source_digest") == lexicon_digest(lex));
    CHECK(meta.at("token_mass") == std::to_string(lex.token_mass()));
    CHECK(meta.at("train_mass") == std::to_string(split.train.token_mass()));
    CHECK(meta.at("dev_mass") == std::to_string(split.dev.token_mass()));
    CHECK(meta.at("test_mass") == std::to_string(split.test.token_mass()));
    fs::remove_all(dir);
}
