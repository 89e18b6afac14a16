#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace cotsep {

/// One few-shot demonstration: a question, its chain-of-thought sentences in
/// order, and the final answer sentence ("The answer is X." or
/// "So the answer is (x)."). Sentences are stored pre-split; nothing in the
/// pipeline ever sentence-splits free text.
struct Exemplar {
    std::string question;
    std::vector<std::string> cot_sentences;
    std::string answer_sentence;
};

/// Throws Error unless the exemplar invariants hold: non-empty question with
/// no trailing newline, at least one newline-free CoT sentence, and an
/// answer sentence with an extractable numeric or choice-letter answer.
void validate(const Exemplar& ex);

struct ExemplarSet {
    std::string task;  // "gsm8k", "aqua", "csqa", ...
    std::vector<Exemplar> exemplars;
};

ExemplarSet parse_exemplar_set(const std::string& json_text);
ExemplarSet load_exemplar_set(const std::filesystem::path& path);
std::string exemplar_set_to_json(const ExemplarSet& set);

}  // namespace cotsep
