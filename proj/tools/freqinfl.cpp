// Command-line front end: lexicalize, split, sweep, evaluate, report.
// Exit codes: 0 success, 1 usage error, 2 data error, 3 numeric error.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "freqinfl/conllu.hpp"
#include "freqinfl/errors.hpp"
#include "freqinfl/harness.hpp"
#include "freqinfl/lexicon.hpp"
#include "freqinfl/metrics.hpp"
#include "freqinfl/split.hpp"
#include "freqinfl/tsv.hpp"

namespace fi = freqinfl;

namespace {

void ensure_parent_dir(const std::string& path) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
}

// "data/cs/" -> "cs"; a bare "/" or "." yields no usable name.
std::string language_from_dir(std::string dir) {
    while (dir.size() > 1 && dir.back() == '/') dir.pop_back();
    std::string name = std::filesystem::path(dir).filename().string();
    if (name.empty() || name == "." || name == "..") return "unknown";
    return name;
}

// Comma-separated list values ("NOUN,PUNCT", "0.0,0.5,1.0") stay one
// command-line token; CLI11 vector options would greedily swallow the
// positionals that follow them.
std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string::size_type start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string::npos ? text.size() : comma;
        if (end > start) out.push_back(text.substr(start, end - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<double> parse_temperature_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& piece : split_csv(text)) {
        double value = 0.0;
        const char* first = piece.data();
        const char* last = piece.data() + piece.size();
        const auto res = std::from_chars(first, last, value);
        if (res.ec != std::errc{} || res.ptr != last)
            throw fi::UsageError("invalid temperature '" + piece + "'");
        out.push_back(value);
    }
    return out;
}

void print_lexicon_stats(const fi::Lexicon& lexicon) {
    std::cout << "types\t" << lexicon.type_count() << "\n"
              << "token_mass\t" << lexicon.token_mass() << "\n";
}

// CLI11 only applies set_config on the root app, so per-subcommand config
// files are handled by hand: key=value pairs whose option was not given on
// the command line are injected and the full line is re-parsed, which keeps
// the command-line-beats-config rule. Keys are long option names without
// the leading dashes; '#' starts a comment.
void reparse_with_config(CLI::App& app, CLI::App* sub, const std::string& cfg_path,
                         int argc, char** argv) {
    if (cfg_path.empty()) return;
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigTOML{}.from_file(cfg_path);
    } catch (const CLI::FileError&) {
        throw fi::DataError("cannot open config file '" + cfg_path + "'");
    }
    std::vector<std::string> injected;
    for (const auto& item : items) {
        if (!item.parents.empty())
            throw fi::UsageError("config file '" + cfg_path +
                                 "': sections are not supported (key '" +
                                 item.fullname() + "')");
        if (item.name == "config")
            throw fi::UsageError("config file '" + cfg_path +
                                 "': nested 'config' keys are not supported");
        const CLI::Option* opt = sub->get_option_no_throw("--" + item.name);
        if (opt == nullptr)
            throw fi::UsageError("config file '" + cfg_path + "': unknown key '" +
                                 item.name + "'");
        if (opt->count() > 0) continue; // command line overrides the file
        // the reader splits comma values into separate inputs; rejoin them
        // since every option here takes a single (possibly CSV) token
        std::string joined;
        for (const auto& input : item.inputs) {
            if (!joined.empty()) joined += ',';
            joined += input;
        }
        injected.push_back("--" + item.name + "=" + joined);
    }
    if (injected.empty()) return;
    // parse(vector) consumes back-to-front and takes no program name; the
    // injected options go right after the subcommand token.
    std::vector<std::string> merged;
    for (int i = argc - 1; i >= 2; --i) merged.emplace_back(argv[i]);
    for (auto it = injected.rbegin(); it != injected.rend(); ++it)
        merged.push_back(*it);
    merged.emplace_back(argv[1]);
    app.parse(merged);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"frequency-aware morphological inflection toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "freqinfl 0.1.0");

    // lexicalize <conllu...> -o lex.tsv [--lowercase] [--drop-upos LIST]
    auto* lex_cmd =
        app.add_subcommand("lexicalize", "extract a frequency lexicon from CoNLL-U files");
    std::string lex_config_path;
    lex_cmd->add_option("--config", lex_config_path,
                        "read options from a key=value file (command line wins)");
    std::vector<std::string> lex_inputs;
    std::string lex_output;
    bool lex_lowercase = false;
    std::string lex_drop_upos;
    lex_cmd->add_option("conllu", lex_inputs, "input CoNLL-U files")
        ->required()
        ->expected(-1);
    lex_cmd->add_option("-o,--output", lex_output, "output lexicon TSV")->required();
    lex_cmd->add_flag("--lowercase", lex_lowercase, "lowercase lemmas and forms");
    lex_cmd->add_option("--drop-upos", lex_drop_upos,
                        "comma-separated UPOS classes to drop");

    // split lex.tsv --ratios 8:1:1 --seed N -o dir/
    auto* split_cmd =
        app.add_subcommand("split", "frequency-weighted lemma-disjoint train/dev/test split");
    std::string split_config_path;
    split_cmd->add_option("--config", split_config_path,
                          "read options from a key=value file (command line wins)");
    std::string split_input;
    std::string split_ratios = "8:1:1";
    std::uint64_t split_seed = 0;
    std::string split_output;
    split_cmd->add_option("lexicon", split_input, "input lexicon TSV")->required();
    split_cmd->add_option("--ratios", split_ratios, "train:dev:test ratio (default 8:1:1)");
    split_cmd->add_option("--seed", split_seed, "master seed (default 0)");
    split_cmd->add_option("-o,--output", split_output, "output split directory")->required();

    // sweep dir/ --temperatures LIST --model rules --mode expectation --seed N -o results/
    auto* sweep_cmd =
        app.add_subcommand("sweep", "temperature sweep of inflection models on a split");
    std::string sweep_config_path;
    sweep_cmd->add_option("--config", sweep_config_path,
                          "read options from a key=value file (command line wins)");
    std::string sweep_input;
    std::string sweep_temperatures;
    std::string sweep_model = "rules";
    std::string sweep_mode = "expectation";
    std::uint64_t sweep_seed = 0;
    std::string sweep_language;
    std::uint64_t sweep_draws = 0;
    int sweep_rule_context = 3;
    std::string sweep_output;
    sweep_cmd->add_option("split_dir", sweep_input, "split directory (from `split`)")
        ->required();
    sweep_cmd->add_option("--temperatures", sweep_temperatures,
                          "comma-separated temperature grid (default: built-in 19-value grid)");
    sweep_cmd->add_option("--model", sweep_model, "model family: rules | copy");
    sweep_cmd->add_option("--mode", sweep_mode, "fitting mode: expectation | sampled");
    sweep_cmd->add_option("--seed", sweep_seed, "master seed (default 0)");
    sweep_cmd->add_option("--language", sweep_language,
                          "language label (default: split directory name)");
    sweep_cmd->add_option("--draws", sweep_draws,
                          "sampled mode: draws per fit (default 0 = one train-mass pass)");
    sweep_cmd->add_option("--rule-context", sweep_rule_context,
                          "rule learner left-context window in code points (default 3)");
    sweep_cmd->add_option("-o,--output", sweep_output, "output results directory")->required();

    // evaluate gold.tsv predictions.tsv
    auto* eval_cmd =
        app.add_subcommand("evaluate", "score a predictions file against a gold lexicon");
    std::string eval_config_path;
    eval_cmd->add_option("--config", eval_config_path,
                         "read options from a key=value file (command line wins)");
    std::string eval_gold;
    std::string eval_predictions;
    eval_cmd->add_option("gold", eval_gold, "gold lexicon TSV")->required();
    eval_cmd->add_option("predictions", eval_predictions, "predictions TSV")->required();

    // report results/ -o report.tsv
    auto* report_cmd =
        app.add_subcommand("report", "aggregate sweep results into a cross-language table");
    std::string report_config_path;
    report_cmd->add_option("--config", report_config_path,
                           "read options from a key=value file (command line wins)");
    std::string report_input;
    std::string report_output;
    report_cmd->add_option("results", report_input, "results tree (sweep output directories)")
        ->required();
    report_cmd->add_option("-o,--output", report_output, "output report TSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? fi::kExitOk : fi::kExitUsage;
    }

    try {
        if (lex_cmd->parsed()) {
            reparse_with_config(app, lex_cmd, lex_config_path, argc, argv);
        } else if (split_cmd->parsed()) {
            reparse_with_config(app, split_cmd, split_config_path, argc, argv);
        } else if (sweep_cmd->parsed()) {
            reparse_with_config(app, sweep_cmd, sweep_config_path, argc, argv);
        } else if (eval_cmd->parsed()) {
            reparse_with_config(app, eval_cmd, eval_config_path, argc, argv);
        } else if (report_cmd->parsed()) {
            reparse_with_config(app, report_cmd, report_config_path, argc, argv);
        }

        if (lex_cmd->parsed()) {
            fi::FilterConfig filter;
            filter.lowercase = lex_lowercase;
            filter.drop_upos = split_csv(lex_drop_upos);
            fi::Lexicon lexicon;
            for (const auto& path : lex_inputs) {
                fi::Lexicon part = fi::lexicalize(fi::parse_conllu_file(path), filter);
                lexicon.merge(part);
            }
            ensure_parent_dir(lex_output);
            fi::write_lexicon(lex_output, lexicon);
            print_lexicon_stats(lexicon);
        } else if (split_cmd->parsed()) {
            fi::SplitConfig config;
            config.fractions = fi::parse_ratios(split_ratios);
            config.ratios_text = split_ratios;
            config.seed = split_seed;
            const fi::Lexicon lexicon = fi::read_lexicon_file(split_input);
            const fi::DataSplit split = fi::split_lexicon(lexicon, config);
            for (const auto& warning : split.warnings)
                std::cerr << "warning: " << warning << "\n";
            fi::write_split(split_output, split, config, fi::lexicon_digest(lexicon));
            std::cout << "set\ttoken_mass\ttypes\n";
            std::cout << "train\t" << split.train.token_mass() << "\t"
                      << split.train.type_count() << "\n";
            std::cout << "dev\t" << split.dev.token_mass() << "\t"
                      << split.dev.type_count() << "\n";
            std::cout << "test\t" << split.test.token_mass() << "\t"
                      << split.test.type_count() << "\n";
        } else if (sweep_cmd->parsed()) {
            fi::SweepConfig config;
            config.language = sweep_language.empty() ? language_from_dir(sweep_input)
                                                     : sweep_language;
            if (!sweep_temperatures.empty())
                config.temperatures = parse_temperature_list(sweep_temperatures);
            config.model = sweep_model;
            config.mode = sweep_mode;
            config.seeds = {sweep_seed};
            config.n_draws = sweep_draws;
            config.rule_context = sweep_rule_context;
            const fi::DataSplit split = fi::read_split(sweep_input);
            const fi::SweepResult result = fi::run_sweep(split, config, sweep_output);
            std::cout << "language\t" << result.language << "\n";
            std::cout << "tau_best\t" << fi::format_tau(result.tau_best) << "\n";
            if (const auto* best = result.find_tau(result.tau_best)) {
                std::cout << "dev_token_acc\t" << fi::tsv::format_full(best->dev_token_acc)
                          << "\n";
                std::cout << "test_token_acc\t" << fi::tsv::format_full(best->test_token_acc)
                          << "\n";
            }
        } else if (eval_cmd->parsed()) {
            const fi::Lexicon gold = fi::read_lexicon_file(eval_gold);
            const auto predictions = fi::read_predictions_file(eval_predictions);
            const fi::EvalOutcome outcome = fi::evaluate(predictions, gold);
            std::cout << "type_acc\ttoken_acc\titems\ttokens\ttype_acc_full\ttoken_acc_full\n";
            std::cout << fi::tsv::format_percent(outcome.type_accuracy) << "\t"
                      << fi::tsv::format_percent(outcome.token_accuracy) << "\t"
                      << outcome.item_total << "\t" << outcome.token_total << "\t"
                      << fi::tsv::format_full(outcome.type_accuracy) << "\t"
                      << fi::tsv::format_full(outcome.token_accuracy) << "\n";
        } else if (report_cmd->parsed()) {
            auto rows = fi::collect_reports(report_input);
            const std::size_t n_languages = rows.size();
            ensure_parent_dir(report_output);
            fi::write_report(report_output, std::move(rows));
            std::cout << "languages\t" << n_languages << "\n";
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? fi::kExitOk : fi::kExitUsage;
    } catch (const fi::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return fi::kExitUsage;
    } catch (const fi::NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return fi::kExitNumeric;
    } catch (const fi::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return fi::kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return fi::kExitData;
    }
    return fi::kExitOk;
}
