#include "freqinfl/harness.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <tuple>

#include "freqinfl/errors.hpp"
#include "freqinfl/rng.hpp"
#include "freqinfl/tsv.hpp"

namespace freqinfl {

namespace {

constexpr const char* kResultsHeader =
    "language\tsystem\ttau\ttype_acc\ttoken_acc\titems\ttokens"
    "\ttype_acc_full\ttoken_acc_full";

// Tie-break: higher accuracy, then |tau| closer to 0, then smaller tau.
bool tau_beats(double tau, double acc, double best_tau, double best_acc) {
    if (acc != best_acc) return acc > best_acc;
    const double a = std::fabs(tau);
    const double b = std::fabs(best_tau);
    if (a != b) return a < b;
    return tau < best_tau;
}

double select_tau_best_pairs(const std::vector<std::pair<double, double>>& accs) {
    if (accs.empty())
        throw DataError("tau-best selection over an empty temperature set");
    double best_tau = accs.front().first;
    double best_acc = accs.front().second;
    for (std::size_t i = 1; i < accs.size(); ++i)
        if (tau_beats(accs[i].first, accs[i].second, best_tau, best_acc)) {
            best_tau = accs[i].first;
            best_acc = accs[i].second;
        }
    return best_tau;
}

double parse_double(std::string_view text, const std::string& source,
                    std::size_t line_no) {
    double value = 0.0;
    auto [end, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() ||
        !std::isfinite(value))
        throw ParseError(source, line_no, 0,
                         "'" + std::string(text) + "' is not a finite number");
    return value;
}

std::uint64_t parse_u64(std::string_view text, const std::string& source,
                        std::size_t line_no) {
    std::uint64_t value = 0;
    auto [end, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size())
        throw ParseError(source, line_no, 0,
                         "'" + std::string(text) +
                             "' is not a non-negative integer");
    return value;
}

std::string results_row(const std::string& language, const SystemResult& row,
                        bool dev) {
    const double type_acc = dev ? row.dev_type_acc : row.test_type_acc;
    const double token_acc = dev ? row.dev_token_acc : row.test_token_acc;
    std::string out = language;
    out += '\t';
    out += row.system;
    out += '\t';
    out += row.has_tau ? format_tau(row.tau) : "-";
    out += '\t';
    out += tsv::format_percent(type_acc);
    out += '\t';
    out += tsv::format_percent(token_acc);
    out += '\t';
    out += std::to_string(dev ? row.dev_items : row.test_items);
    out += '\t';
    out += std::to_string(dev ? row.dev_tokens : row.test_tokens);
    out += '\t';
    out += tsv::format_full(type_acc);
    out += '\t';
    out += tsv::format_full(token_acc);
    out += '\n';
    return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw DataError("failed writing '" + path.string() + "'");
}

} // namespace

std::vector<double> default_temperature_grid() {
    return {-1.0, -0.8, -0.6, -0.5, -0.4, -0.3, -0.2, -0.1, 0.0, 0.1,
            0.2,  0.3,  0.4,  0.5,  0.6,  0.8,  1.0,  1.1,  2.0};
}

std::string format_tau(double tau) {
    if (tau == 0.0) tau = 0.0; // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", tau);
    std::string text(buf);
    while (text.back() == '0') text.pop_back();
    if (text.back() == '.') text += '0';
    return text;
}

const SystemResult* SweepResult::find_tau(double tau) const {
    const std::string wanted = format_tau(tau);
    for (const SystemResult& row : systems)
        if (row.has_tau && format_tau(row.tau) == wanted) return &row;
    return nullptr;
}

const SystemResult* SweepResult::find_copy() const {
    for (const SystemResult& row : systems)
        if (!row.has_tau) return &row;
    return nullptr;
}

double select_tau_best(const std::map<double, EvalOutcome>& dev_outcomes) {
    std::vector<std::pair<double, double>> accs;
    accs.reserve(dev_outcomes.size());
    for (const auto& [tau, outcome] : dev_outcomes)
        accs.emplace_back(tau, outcome.token_accuracy);
    return select_tau_best_pairs(accs);
}

std::vector<Prediction> predict_all(const InflectionModel& model,
                                    const Lexicon& gold) {
    std::vector<Prediction> predictions;
    const LexEntry* prev = nullptr;
    for (const LexEntry& e : gold.entries()) {
        if (prev != nullptr && prev->lemma == e.lemma && prev->tag == e.tag)
            continue; // free-variation rows share one prediction per key
        predictions.push_back(
            Prediction{e.lemma, e.tag, model.predict(e.lemma, e.tag)});
        prev = &e;
    }
    return predictions;
}

SweepResult run_sweep(const DataSplit& split, const SweepConfig& config,
                      const std::string& out_dir) {
    if (config.model != "rules" && config.model != "copy")
        throw UsageError("unknown model '" + config.model +
                         "' (expected rules or copy)");
    if (config.mode != "expectation" && config.mode != "sampled")
        throw UsageError("unknown mode '" + config.mode +
                         "' (expected expectation or sampled)");
    if (config.temperatures.empty())
        throw UsageError("temperature list must not be empty");
    if (config.seeds.empty())
        throw UsageError("at least one seed is required");
    const FitMode fit_mode = config.mode == "expectation"
                                 ? FitMode::kExpectation
                                 : FitMode::kSampled;

    try {
        // The fixed comparison systems tau=0.0 and tau=0.5 are always
        // evaluated alongside the requested grid.
        std::vector<double> taus = config.temperatures;
        taus.push_back(0.0);
        taus.push_back(0.5);
        std::sort(taus.begin(), taus.end());
        taus.erase(std::unique(taus.begin(), taus.end(),
                               [](double a, double b) {
                                   return format_tau(a) == format_tau(b);
                               }),
                   taus.end());

        const std::uint64_t n_draws = config.n_draws != 0
                                          ? config.n_draws
                                          : split.train.token_mass();

        SweepResult result;
        result.language = config.language;

        const CopyModel copy_model;
        SystemResult copy_row;
        copy_row.system = "copy";
        {
            EvalOutcome dev =
                evaluate(predict_all(copy_model, split.dev), split.dev);
            EvalOutcome test =
                evaluate(predict_all(copy_model, split.test), split.test);
            copy_row.dev_type_acc = dev.type_accuracy;
            copy_row.dev_token_acc = dev.token_accuracy;
            copy_row.test_type_acc = test.type_accuracy;
            copy_row.test_token_acc = test.token_accuracy;
            copy_row.dev_items = dev.item_total;
            copy_row.dev_tokens = dev.token_total;
            copy_row.test_items = test.item_total;
            copy_row.test_tokens = test.token_total;
        }
        result.systems.push_back(copy_row);

        struct Artifact {
            std::string name;
            std::string content;
        };
        std::vector<Artifact> model_files;
        std::vector<Artifact> prediction_files;
        if (!out_dir.empty())
            prediction_files.push_back(Artifact{
                "copy.tsv",
                predictions_to_tsv(predict_all(copy_model, split.test))});

        for (std::size_t ti = 0; ti < taus.size(); ++ti) {
            const double tau = taus[ti];
            SystemResult row;
            row.system = config.model;
            row.has_tau = true;
            row.tau = tau;
            double dev_type = 0, dev_token = 0, test_type = 0, test_token = 0;
            for (std::size_t si = 0; si < config.seeds.size(); ++si) {
                std::unique_ptr<InflectionModel> model;
                if (config.model == "copy") {
                    model = std::make_unique<CopyModel>();
                } else {
                    // Per-stage seed: the sampler stream for this tau cell.
                    model = std::make_unique<RuleModel>(RuleModel::fit(
                        split.train, tau, fit_mode,
                        derive_seed(config.seeds[si], "sampler", ti), n_draws,
                        config.rule_context));
                }
                EvalOutcome dev =
                    evaluate(predict_all(*model, split.dev), split.dev);
                EvalOutcome test =
                    evaluate(predict_all(*model, split.test), split.test);
                dev_type += dev.type_accuracy;
                dev_token += dev.token_accuracy;
                test_type += test.type_accuracy;
                test_token += test.token_accuracy;
                row.dev_items = dev.item_total;
                row.dev_tokens = dev.token_total;
                row.test_items = test.item_total;
                row.test_tokens = test.token_total;
                if (si == 0 && !out_dir.empty()) {
                    prediction_files.push_back(
                        Artifact{"tau_" + format_tau(tau) + ".tsv",
                                 predictions_to_tsv(
                                     predict_all(*model, split.test))});
                    if (const auto* rules =
                            dynamic_cast<const RuleModel*>(model.get()))
                        model_files.push_back(
                            Artifact{"tau_" + format_tau(tau) + ".tsv",
                                     rules->to_tsv()});
                }
            }
            const double n = static_cast<double>(config.seeds.size());
            row.dev_type_acc = dev_type / n;
            row.dev_token_acc = dev_token / n;
            row.test_type_acc = test_type / n;
            row.test_token_acc = test_token / n;
            result.systems.push_back(row);
        }

        std::vector<std::pair<double, double>> dev_accs;
        for (const SystemResult& row : result.systems)
            if (row.has_tau) dev_accs.emplace_back(row.tau, row.dev_token_acc);
        result.tau_best = select_tau_best_pairs(dev_accs);
#ifndef NDEBUG
        for (const auto& [tau, acc] : dev_accs)
            assert(result.find_tau(result.tau_best)->dev_token_acc >= acc);
#endif

        if (!out_dir.empty()) {
            namespace fs = std::filesystem;
            const fs::path base(out_dir);
            fs::create_directories(base / "predictions");
            if (!model_files.empty()) fs::create_directories(base / "models");

            std::string dev_tsv(kResultsHeader);
            dev_tsv += '\n';
            std::string test_tsv = dev_tsv;
            for (const SystemResult& row : result.systems) {
                dev_tsv += results_row(result.language, row, /*dev=*/true);
                test_tsv += results_row(result.language, row, /*dev=*/false);
            }
            write_text(base / "dev.tsv", dev_tsv);
            write_text(base / "test.tsv", test_tsv);

            std::string meta = "language=" + config.language + "\n";
            meta += "model=" + config.model + "\n";
            meta += "mode=" + config.mode + "\n";
            meta += "seeds=";
            for (std::size_t i = 0; i < config.seeds.size(); ++i) {
                if (i > 0) meta += ',';
                meta += std::to_string(config.seeds[i]);
            }
            meta += "\ndraws=" + std::to_string(n_draws) + "\n";
            meta += "rule_context=" + std::to_string(config.rule_context) + "\n";
            meta += "temperatures=";
            for (std::size_t i = 0; i < taus.size(); ++i) {
                if (i > 0) meta += ',';
                meta += format_tau(taus[i]);
            }
            meta += "\ntau_best=" + format_tau(result.tau_best) + "\n";
            meta += std::string("rng=") + kRngName + "\n";
            meta += "train_digest=" + lexicon_digest(split.train) + "\n";
            meta += "dev_digest=" + lexicon_digest(split.dev) + "\n";
            meta += "test_digest=" + lexicon_digest(split.test) + "\n";
            write_text(base / "sweep-meta.txt", meta);

            for (const Artifact& a : prediction_files)
                write_text(base / "predictions" / a.name, a.content);
            for (const Artifact& a : model_files)
                write_text(base / "models" / a.name, a.content);
        }
        return result;
    } catch (const NumericError& e) {
        throw NumericError("language '" + config.language + "': " + e.what());
    } catch (const UsageError&) {
        throw;
    } catch (const DataError& e) {
        throw DataError("language '" + config.language + "': " + e.what());
    }
}

SweepResult run_lexicon(const Lexicon& lexicon, const SplitConfig& split_config,
                        const SweepConfig& sweep_config,
                        const std::string& out_dir) {
    DataSplit split = split_lexicon(lexicon, split_config);
    return run_sweep(split, sweep_config, out_dir);
}

SweepResult run_language(const std::vector<std::string>& treebank_paths,
                         const FilterConfig& filter,
                         const SplitConfig& split_config,
                         const SweepConfig& sweep_config,
                         const std::string& out_dir) {
    if (treebank_paths.empty())
        throw UsageError("at least one treebank file is required");
    std::vector<Sentence> sentences;
    for (const std::string& path : treebank_paths) {
        std::vector<Sentence> parsed = parse_conllu_file(path);
        sentences.insert(sentences.end(),
                         std::make_move_iterator(parsed.begin()),
                         std::make_move_iterator(parsed.end()));
    }
    Lexicon lexicon = lexicalize(sentences, filter);
    return run_lexicon(lexicon, split_config, sweep_config, out_dir);
}

namespace {

struct ResultRow {
    std::string language;
    std::string system;
    bool has_tau = false;
    double tau = 0.0;
    std::string tau_text;
    double type_acc = 0.0;
    double token_acc = 0.0;
};

std::vector<ResultRow> parse_results_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::vector<ResultRow> rows;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!saw_header) {
            if (line != kResultsHeader)
                throw ParseError(path, line_no, 0,
                                 "unexpected results header");
            saw_header = true;
            continue;
        }
        if (line.empty()) continue;
        std::vector<std::string_view> cols = tsv::split(line);
        if (cols.size() != 9)
            throw ParseError(path, line_no, 0,
                             "expected 9 tab-separated columns, got " +
                                 std::to_string(cols.size()));
        ResultRow row;
        row.language = std::string(cols[0]);
        row.system = std::string(cols[1]);
        row.tau_text = std::string(cols[2]);
        if (row.language.empty() || row.system.empty())
            throw ParseError(path, line_no, 0, "empty language or system");
        if (row.tau_text != "-") {
            row.has_tau = true;
            row.tau = parse_double(row.tau_text, path, line_no);
        }
        parse_u64(cols[5], path, line_no); // items, validated only
        parse_u64(cols[6], path, line_no); // tokens, validated only
        row.type_acc = parse_double(cols[7], path, line_no);
        row.token_acc = parse_double(cols[8], path, line_no);
        rows.push_back(std::move(row));
    }
    if (!saw_header)
        throw ParseError(path, 1, 0, "empty results file (no header)");
    return rows;
}

} // namespace

std::vector<LanguageReport> collect_reports(const std::string& results_dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(results_dir))
        throw DataError("'" + results_dir + "' is not a directory");

    std::vector<std::string> dev_files, test_files;
    for (const fs::directory_entry& entry :
         fs::recursive_directory_iterator(results_dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string name = entry.path().filename().string();
        if (name == "dev.tsv") dev_files.push_back(entry.path().string());
        if (name == "test.tsv") test_files.push_back(entry.path().string());
    }
    std::sort(dev_files.begin(), dev_files.end());
    std::sort(test_files.begin(), test_files.end());
    if (dev_files.empty() || test_files.empty())
        throw DataError("no dev.tsv/test.tsv results found under '" +
                        results_dir + "'");

    // key: (language, system, tau text)
    using RowKey = std::tuple<std::string, std::string, std::string>;
    std::map<RowKey, ResultRow> dev_rows, test_rows;
    auto ingest = [&](const std::vector<std::string>& files,
                      std::map<RowKey, ResultRow>& sink) {
        for (const std::string& file : files)
            for (ResultRow& row : parse_results_file(file)) {
                RowKey key{row.language, row.system, row.tau_text};
                if (sink.find(key) != sink.end())
                    throw DataError("duplicate result row for language '" +
                                    row.language + "', system '" + row.system +
                                    "', tau '" + row.tau_text + "' in '" +
                                    file + "'");
                sink.emplace(std::move(key), std::move(row));
            }
    };
    ingest(dev_files, dev_rows);
    ingest(test_files, test_rows);

    std::set<std::string> languages;
    for (const auto& [key, row] : test_rows) languages.insert(row.language);

    std::vector<LanguageReport> reports;
    for (const std::string& language : languages) {
        LanguageReport report;
        report.language = language;

        std::vector<std::pair<double, double>> dev_accs;
        for (const auto& [key, row] : dev_rows)
            if (row.language == language && row.has_tau)
                dev_accs.emplace_back(row.tau, row.token_acc);
        if (dev_accs.empty())
            throw DataError("no temperature rows on dev for language '" +
                            language + "'");
        report.tau_best = select_tau_best_pairs(dev_accs);

        auto test_row = [&](const std::string& system,
                            const std::string& tau_text) -> const ResultRow& {
            auto it = test_rows.find(RowKey{language, system, tau_text});
            if (it == test_rows.end())
                throw DataError("missing test row (system '" + system +
                                "', tau '" + tau_text + "') for language '" +
                                language + "'");
            return it->second;
        };
        auto tau_row = [&](double tau) -> const ResultRow& {
            for (const auto& [key, row] : test_rows)
                if (row.language == language && row.has_tau &&
                    row.tau_text == format_tau(tau))
                    return row;
            throw DataError("missing test row for tau " + format_tau(tau) +
                            " for language '" + language + "'");
        };

        const ResultRow& copy = test_row("copy", "-");
        report.copy_type = copy.type_acc;
        report.copy_token = copy.token_acc;
        const ResultRow& tau0 = tau_row(0.0);
        report.tau0_type = tau0.type_acc;
        report.tau0_token = tau0.token_acc;
        const ResultRow& tau05 = tau_row(0.5);
        report.tau05_type = tau05.type_acc;
        report.tau05_token = tau05.token_acc;
        const ResultRow& best = tau_row(report.tau_best);
        report.best_type = best.type_acc;
        report.best_token = best.token_acc;
        reports.push_back(std::move(report));
    }
    return reports;
}

void write_report(const std::string& path, std::vector<LanguageReport> rows) {
    if (rows.empty()) throw DataError("nothing to report");
    std::sort(rows.begin(), rows.end(),
              [](const LanguageReport& a, const LanguageReport& b) {
                  return a.language < b.language;
              });

    auto best_system = [](const LanguageReport& r) -> std::string {
        const double token[4] = {r.copy_token, r.tau0_token, r.tau05_token,
                                 r.best_token};
        static const char* names[4] = {"copy", "tau=0.0", "tau=0.5",
                                       "tau-best"};
        std::size_t best = 0;
        for (std::size_t i = 1; i < 4; ++i)
            if (token[i] > token[best]) best = i;
        return names[best];
    };

    std::string out =
        "language\tcopy_token\ttau0.0_token\ttau0.5_token\ttau_best_token"
        "\tcopy_type\ttau0.0_type\ttau0.5_type\ttau_best_type"
        "\ttau_best\tbest_token_system\n";
    auto append_row = [&](const std::string& language, const LanguageReport& r,
                          const std::string& tau_text) {
        out += language;
        out += '\t';
        out += tsv::format_percent(r.copy_token);
        out += '\t';
        out += tsv::format_percent(r.tau0_token);
        out += '\t';
        out += tsv::format_percent(r.tau05_token);
        out += '\t';
        out += tsv::format_percent(r.best_token);
        out += '\t';
        out += tsv::format_percent(r.copy_type);
        out += '\t';
        out += tsv::format_percent(r.tau0_type);
        out += '\t';
        out += tsv::format_percent(r.tau05_type);
        out += '\t';
        out += tsv::format_percent(r.best_type);
        out += '\t';
        out += tau_text;
        out += '\t';
        out += best_system(r);
        out += '\n';
    };
    for (const LanguageReport& r : rows)
        append_row(r.language, r, format_tau(r.tau_best));

    LanguageReport macro;
    for (const LanguageReport& r : rows) {
        macro.copy_type += r.copy_type;
        macro.copy_token += r.copy_token;
        macro.tau0_type += r.tau0_type;
        macro.tau0_token += r.tau0_token;
        macro.tau05_type += r.tau05_type;
        macro.tau05_token += r.tau05_token;
        macro.best_type += r.best_type;
        macro.best_token += r.best_token;
    }
    const double n = static_cast<double>(rows.size());
    macro.copy_type /= n;
    macro.copy_token /= n;
    macro.tau0_type /= n;
    macro.tau0_token /= n;
    macro.tau05_type /= n;
    macro.tau05_token /= n;
    macro.best_type /= n;
    macro.best_token /= n;
    append_row("macro-avg", macro, "-");

    write_text(std::filesystem::path(path), out);
}

} // namespace freqinfl
