#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cotsep {

enum class TaskKind { ArithmeticNumeric, MultipleChoice5 };

enum class Benchmark { Gsm8k, Aqua, Csqa };

TaskKind benchmark_kind(Benchmark b);
std::string_view benchmark_name(Benchmark b);
std::optional<Benchmark> benchmark_from_name(std::string_view name);

// Official test/dev split sizes used for validation.
inline constexpr std::size_t kGsm8kTestCount = 1319;
inline constexpr std::size_t kAquaTestCount = 254;
inline constexpr std::size_t kCsqaDevCount = 1221;
std::size_t benchmark_expected_count(Benchmark b);

struct Choice {
    char letter = 0;  // 'a'..'e'
    std::string text;
};

struct BenchmarkItem {
    std::string id;
    std::string question;
    std::vector<Choice> choices;  // empty for numeric tasks
    std::string gold_numeric;     // canonical decimal, numeric tasks
    char gold_letter = 0;         // choice tasks
    TaskKind kind = TaskKind::ArithmeticNumeric;

    bool operator==(const BenchmarkItem&) const = default;
};

struct LoadOptions {
    bool lenient = false;  // skip malformed lines instead of throwing
};

// Loaders for the official line-delimited JSON files. Order-preserving and
// deterministic; malformed lines throw MalformedLine unless lenient.
std::vector<BenchmarkItem> load_gsm8k(std::istream& in, const LoadOptions& opts = {});
std::vector<BenchmarkItem> load_aqua(std::istream& in, const LoadOptions& opts = {});
std::vector<BenchmarkItem> load_csqa(std::istream& in, const LoadOptions& opts = {});
std::vector<BenchmarkItem> load_benchmark(Benchmark b, std::istream& in,
                                          const LoadOptions& opts = {});
std::vector<BenchmarkItem> load_benchmark_file(Benchmark b, const std::filesystem::path& path,
                                               const LoadOptions& opts = {});

/// Numeric tasks: the question verbatim. Multiple choice: "{question} Answer
/// Choices: (a) {...} (b) {...}" with single spaces between entries.
std::string format_question(const BenchmarkItem& item);

// Normalized-item cache format (lossless round trip).
std::string item_to_json_line(const BenchmarkItem& item);
BenchmarkItem item_from_json_line(const std::string& line);
void write_items_jsonl(const std::vector<BenchmarkItem>& items, std::ostream& out);
std::vector<BenchmarkItem> read_items_jsonl(std::istream& in);

}  // namespace cotsep
