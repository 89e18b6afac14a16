#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace cotsep {

struct CompletionRequest {
    std::string model;
    std::string prompt;
    int max_tokens = 256;
    double temperature = 0.0;
    long trial_seed = 0;  // cache partition tag; never sent upstream
    // Harness bookkeeping only (mock routing by item id); excluded from the
    // cache key and the wire payload.
    std::string item_tag;
};

enum class FinishReason { Stop, Length, Error };

std::string_view finish_reason_name(FinishReason r);

struct CompletionResult {
    std::string text;
    FinishReason finish_reason = FinishReason::Stop;
    long latency_ms = 0;
    bool cached = false;
};

class Client {
public:
    virtual ~Client() = default;
    virtual CompletionResult complete(const CompletionRequest& req) = 0;
};

/// Cache key: SHA-256 over (model, prompt bytes, max_tokens, temperature,
/// trial_seed). Two requests differing only in trial_seed are distinct.
std::string request_cache_key(const CompletionRequest& req);

/// Deterministic scripted client. Responses are looked up by item tag first,
/// then by prompt digest; MissingScriptEntry when unmapped and no default.
class MockClient : public Client {
public:
    struct Script {
        std::map<std::string, std::string> by_id;
        std::map<std::string, std::string> by_digest;  // keyed by sha256(prompt)
        std::optional<std::string> default_response;
    };

    explicit MockClient(Script script) : script_(std::move(script)) {}
    static MockClient from_file(const std::filesystem::path& path);

    CompletionResult complete(const CompletionRequest& req) override;

private:
    Script script_;
};

struct HttpClientOptions {
    std::string base_url;  // e.g. "https://api.openai.com/v1"
    std::string api_key;
    int max_retries = 5;
    std::chrono::milliseconds initial_backoff{500};
    double backoff_factor = 2.0;
    std::chrono::milliseconds max_backoff{30000};
    int max_in_flight = 4;
    double requests_per_second = 0.0;  // 0 = unthrottled
    std::chrono::seconds timeout{120};
};

/// Chat-completions client: POST {base}/chat/completions with the prompt as a
/// single user message and "Q:" as the only stop hint. Transient failures
/// (429, 5xx, timeouts) retry with exponential backoff; 401/403 raise
/// AuthError immediately.
class HttpChatClient : public Client {
public:
    explicit HttpChatClient(HttpClientOptions options);
    ~HttpChatClient() override;

    CompletionResult complete(const CompletionRequest& req) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Persistent content-addressed request/response store wrapped around any
/// client. Identical request tuples are served from disk without touching
/// the upstream; writes go through temp-file + rename.
class CachingClient : public Client {
public:
    CachingClient(Client& upstream, std::filesystem::path cache_dir);

    CompletionResult complete(const CompletionRequest& req) override;

private:
    Client& upstream_;
    std::filesystem::path dir_;
    std::mutex write_mutex_;
};

}  // namespace cotsep
