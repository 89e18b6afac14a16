#pragma once

#include <stdexcept>
#include <string>

namespace cotsep {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// prompt_core
struct EmptyExemplarList : Error {
    EmptyExemplarList() : Error("exemplar list is empty") {}
};
struct EmptyQuestion : Error {
    EmptyQuestion() : Error("test question is empty") {}
};
struct MalformedPrompt : Error {
    using Error::Error;
};

// datasets
struct MalformedLine : Error {
    MalformedLine(std::size_t line_no, const std::string& what)
        : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    std::size_t line;
};
struct UnknownGoldLetter : MalformedLine {
    using MalformedLine::MalformedLine;
};
struct MissingAnswerKey : MalformedLine {
    using MalformedLine::MalformedLine;
};

// llm_client
struct AuthError : Error {
    using Error::Error;
};
struct RateLimitExhausted : Error {
    using Error::Error;
};
struct TransportError : Error {
    using Error::Error;
};
struct MissingScriptEntry : Error {
    using Error::Error;
};

// answer_extract / eval_runner
struct KindMismatch : Error {
    using Error::Error;
};
struct EmptyInput : Error {
    using Error::Error;
};

}  // namespace cotsep
