#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cotsep/client.hpp"
#include "cotsep/dataset.hpp"
#include "cotsep/exemplar.hpp"
#include "cotsep/extract.hpp"
#include "cotsep/separators.hpp"

namespace cotsep {

struct RunConfig {
    Benchmark benchmark = Benchmark::Gsm8k;
    std::string dataset_path;
    std::string exemplar_path;
    SeparatorPolicy policy = SeparatorPolicy::vanilla();
    std::string model = "mock";
    int trials = 3;
    int max_tokens = 256;
    double temperature = 0.0;
    std::optional<int> sample_limit;
    std::string output_dir = "runs";
    int max_in_flight = 4;
};

/// Stable 12-hex-digit id over everything that shapes the result set; the
/// run directory is output_dir/{fingerprint}.
std::string config_fingerprint(const RunConfig& config);
std::filesystem::path run_dir(const RunConfig& config);

struct ItemRecord {
    std::string item_id;
    int trial = 0;
    std::string prompt_digest;
    std::string generation;
    ExtractedAnswer extracted;
    bool correct = false;
    long latency_ms = 0;
    bool cached = false;
};

std::string record_to_json_line(const ItemRecord& rec);
ItemRecord record_from_json_line(const std::string& line);

/// Reads one trial-{t}.jsonl, silently dropping a truncated final line (the
/// crash-recovery path) and duplicate item ids.
std::vector<ItemRecord> read_trial_records(const std::filesystem::path& path);

struct RunReport {
    std::string fingerprint;
    std::string model;
    std::string benchmark;  // "gsm8k" / "aqua" / "csqa"
    std::string method;     // policy label, e.g. "vanilla", "tripleskip"
    int n_items = 0;
    int trials = 0;
    std::vector<double> trial_accuracies;  // fractions in [0,1], by trial index
    double mean_pct = 0.0;
    double std_pct = 0.0;
};

/// (mean, population std) of trial accuracies, both as percentages.
/// Throws EmptyInput on an empty list.
std::pair<double, double> aggregate(const std::vector<double>& trial_accuracies);

/// Table-cell style: mean to one decimal, std to two — "71.7 ±0.26".
std::string format_cell(double mean_pct, double std_pct);

std::string report_to_json(const RunReport& report);
RunReport report_from_json(const std::string& json_text);
RunReport load_report(const std::filesystem::path& run_directory);

/// Runs every (trial, item) cell that is not already on disk, appending one
/// ItemRecord line per completion to runs/{fingerprint}/trial-{t}.jsonl, then
/// recomputes the report purely from the persisted records and writes
/// report.json / report.md. Safe to re-run after a crash: completed cells
/// are never re-issued.
RunReport run_experiment(const RunConfig& config, Client& client,
                         const std::vector<BenchmarkItem>& items,
                         const ExemplarSet& exemplars);

/// Convenience overload that loads the dataset and exemplar set from the
/// paths in the config.
RunReport run_experiment(const RunConfig& config, Client& client);

enum class ReportFormat { Text, Markdown, Csv, Json };

std::optional<ReportFormat> report_format_from_name(std::string_view name);

/// Grid with methods as rows and tasks as columns, one "mean ±std" cell per
/// (method, task) pair.
std::string render_report(const std::vector<RunReport>& reports,
                          ReportFormat format = ReportFormat::Text);

}  // namespace cotsep
