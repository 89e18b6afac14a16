#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "cotsep/runner.hpp"
#include "cotsep/separators.hpp"

namespace cotsep {

/// Flags shared by the config file and the command line for choosing a
/// separator policy. Resolution order: explicit policy name, else a named
/// separator (--sep) or token+count implies Homogeneous, else Vanilla.
struct PolicyFlags {
    std::optional<std::string> policy;  // vanilla | homogeneous | heterogeneous
    std::optional<std::string> separator;  // tripleskip | triplehash | triplestar | br | brslash
    std::optional<std::string> token;      // newline | hash | star
    std::optional<int> count;              // 1..3
    std::optional<std::string> unit;       // exemplar | sentence
};

/// Throws Error with a message suitable for CLI display on contradictory or
/// out-of-range flags (e.g. count outside 1..3).
SeparatorPolicy resolve_policy(const PolicyFlags& flags);

/// Parses the flat "key = value" run-config format ('#' comments, blank
/// lines ignored). Unknown keys are an error.
RunConfig parse_run_config(std::istream& in);
RunConfig load_run_config(const std::filesystem::path& path);

/// Shipped-data lookup: COTSEP_DATA_DIR env var when set, otherwise the
/// compiled-in default.
std::filesystem::path default_data_dir();

/// data_dir/exemplars/{gsm8k_8shot,aqua_4shot,csqa_7shot}.json
std::filesystem::path default_exemplar_path(Benchmark b,
                                            const std::filesystem::path& data_dir);

}  // namespace cotsep
