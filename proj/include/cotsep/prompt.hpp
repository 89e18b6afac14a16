#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cotsep/exemplar.hpp"
#include "cotsep/separators.hpp"

namespace cotsep {

struct PromptText {
    std::string body;  // few-shot context + "Q: {test question}\nA:"
    int exemplar_count = 0;
    std::string policy_fingerprint;
};

/// "Q: {question}\nA: {CoT sentences joined by single spaces} {answer}".
/// No trailing whitespace; sentence-unit separators are not applied here.
std::string render_exemplar(const Exemplar& ex);

/// The few-shot context: every exemplar block plus the junction that follows
/// it, up to (not including) the test-question cue.
///
/// Vanilla and sentence-unit prompts join blocks with one blank line; under
/// unit=ExemplarEnd each block is followed by its separator instead — newline
/// separators start right after the answer line, glyph separators (###, ***,
/// <br>, <br/>) sit on the answer line, space-separated, then a newline. A
/// separator follows every exemplar including the last.
std::string render_context(const std::vector<Exemplar>& exemplars,
                           const SeparatorPolicy& policy);

/// render_context + "Q: {test_question}\nA:". Throws EmptyExemplarList /
/// EmptyQuestion. Byte-deterministic.
PromptText build_prompt(const std::vector<Exemplar>& exemplars,
                        const SeparatorPolicy& policy,
                        std::string_view test_question);

/// Inverse of build_prompt's separator insertion: recovers the Q/A block
/// structure, removes the policy's separators and re-renders the same
/// exemplars vanilla. Throws MalformedPrompt when the block structure cannot
/// be recovered.
std::string strip_separators(const PromptText& prompt, const SeparatorPolicy& policy);

}  // namespace cotsep
