#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "cotsep/dataset.hpp"

namespace cotsep {

enum class ExtractStrategy { AnswerPhrase, LastNumber, ChoicePattern, None };

std::string_view strategy_name(ExtractStrategy s);

struct ExtractedAnswer {
    ExtractStrategy strategy = ExtractStrategy::None;
    std::string numeric;  // canonical decimal when a numeric answer was found
    char letter = 0;      // 'a'..'e' when a choice answer was found
    std::size_t span_begin = 0;  // [begin,end) character range in the generation
    std::size_t span_end = 0;

    bool has_value() const { return strategy != ExtractStrategy::None; }
};

/// Numeric answer extraction, total over arbitrary text. First the last
/// case-insensitive "the answer is" phrase is searched and the first number
/// after it parsed ($, commas and a trailing "." are stripped; negatives and
/// decimals accepted). Only when no phrase exists at all does the last number
/// token in the text serve as fallback.
ExtractedAnswer extract_numeric(std::string_view generation);

/// Choice-letter extraction, total over arbitrary text. Takes the last
/// "answer is (x)" / "answer is x" occurrence whose letter is in `allowed`
/// (a subset of "abcde", case-insensitive), falling back to the last
/// standalone "(x)". Never returns a letter outside `allowed`.
ExtractedAnswer extract_choice(std::string_view generation, std::string_view allowed);

struct GoldAnswer {
    TaskKind kind = TaskKind::ArithmeticNumeric;
    std::string numeric;  // canonical decimal
    char letter = 0;

    static GoldAnswer of_numeric(std::string value);
    static GoldAnswer of_letter(char letter);
    static GoldAnswer of_item(const BenchmarkItem& item);
};

/// Numeric answers compare by exact decimal value (72 == 72.0 == "72."),
/// letters case-insensitively; a none-valued extraction grades false.
/// Throws KindMismatch when the extraction's value type contradicts `kind`.
bool grade(const ExtractedAnswer& extracted, const GoldAnswer& gold, TaskKind kind);

}  // namespace cotsep
