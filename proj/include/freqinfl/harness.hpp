#ifndef FREQINFL_HARNESS_HPP
#define FREQINFL_HARNESS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "freqinfl/inflect.hpp"
#include "freqinfl/lexicon.hpp"
#include "freqinfl/metrics.hpp"
#include "freqinfl/split.hpp"

namespace freqinfl {

/// The temperature grid swept in the experiments (19 values in [-1, 2]).
std::vector<double> default_temperature_grid();

/// Canonical temperature text: trimmed decimal with at least one fractional
/// digit ("0.0", "-0.5", "1.1"); used in file names and TSV cells.
std::string format_tau(double tau);

struct SweepConfig {
    std::string language = "unknown";
    std::vector<double> temperatures = default_temperature_grid();
    std::string model = "rules";      // "rules" | "copy"
    std::string mode = "expectation"; // "expectation" | "sampled"
    std::vector<std::uint64_t> seeds = {0}; // master seeds
    std::uint64_t n_draws = 0; // sampled mode; 0 = one train-mass pass
    int rule_context = 3;
};

/// One evaluated system: the copy baseline (has_tau = false) or the
/// configured model at one temperature. Accuracies are means over the
/// configured seeds (a single value in expectation mode).
struct SystemResult {
    std::string system;
    bool has_tau = false;
    double tau = 0.0;
    double dev_type_acc = 0.0, dev_token_acc = 0.0;
    double test_type_acc = 0.0, test_token_acc = 0.0;
    std::uint64_t dev_items = 0, dev_tokens = 0;
    std::uint64_t test_items = 0, test_tokens = 0;
};

struct SweepResult {
    std::string language;
    std::vector<SystemResult> systems; // copy first, then taus ascending
    double tau_best = 0.0;

    const SystemResult* find_tau(double tau) const;
    const SystemResult* find_copy() const;
};

/// argmax of dev token accuracy over temperatures; ties prefer |tau| closer
/// to 0, then the smaller tau.
double select_tau_best(const std::map<double, EvalOutcome>& dev_outcomes);

/// One prediction per distinct (lemma, tag) key of the gold lexicon.
std::vector<Prediction> predict_all(const InflectionModel& model,
                                    const Lexicon& gold);

/// Fits and evaluates the copy baseline plus the configured model at every
/// temperature (the user grid always extended with 0.0 and 0.5, the fixed
/// comparison systems) on dev and test, then selects tau-best on dev token
/// accuracy. When out_dir is non-empty, writes dev.tsv, test.tsv,
/// sweep-meta.txt, per-temperature model files (models/) and test
/// predictions (predictions/); serialized artifacts come from the first
/// configured seed.
SweepResult run_sweep(const DataSplit& split, const SweepConfig& config,
                      const std::string& out_dir = "");

/// lexicon -> split -> sweep. Convenience composition used by experiments.
SweepResult run_lexicon(const Lexicon& lexicon, const SplitConfig& split_config,
                        const SweepConfig& sweep_config,
                        const std::string& out_dir = "");

/// CoNLL-U files -> merged lexicon -> split -> sweep.
SweepResult run_language(const std::vector<std::string>& treebank_paths,
                         const FilterConfig& filter,
                         const SplitConfig& split_config,
                         const SweepConfig& sweep_config,
                         const std::string& out_dir = "");

/// One report line: test accuracies of the four comparison systems.
struct LanguageReport {
    std::string language;
    double copy_type = 0.0, copy_token = 0.0;
    double tau0_type = 0.0, tau0_token = 0.0;
    double tau05_type = 0.0, tau05_token = 0.0;
    double best_type = 0.0, best_token = 0.0;
    double tau_best = 0.0;
};

/// Scans a results tree for dev.tsv/test.tsv pairs written by run_sweep and
/// assembles one LanguageReport per language (tau-best re-derived from the
/// dev rows).
std::vector<LanguageReport> collect_reports(const std::string& results_dir);

/// Report TSV: per-language rows (token-accuracy block, then type-accuracy
/// block, percentages with 2 decimals), a macro-average row, and the
/// highest-token-accuracy system flagged per row.
void write_report(const std::string& path, std::vector<LanguageReport> rows);

} // namespace freqinfl

#endif // FREQINFL_HARNESS_HPP
