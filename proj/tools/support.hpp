#pragma once

#include "gallai/exact.hpp"

#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace gallai::cli {

enum Exit : int { ok = 0, negative = 1, usage = 2, capped = 3 };

constexpr const char* kVersion = "0.3.1";
constexpr const char* kCacheEnv = "GALLAI_CACHE_DIR";

std::string sha256_hex(const std::filesystem::path& file);

/// Memo cache under $GALLAI_CACHE_DIR. Without the variable the memo lives
/// only for this process.
class CacheSession {
public:
    explicit CacheSession(MemoStore& memo, bool enabled = true);
    ~CacheSession();
    CacheSession(const CacheSession&) = delete;
    CacheSession& operator=(const CacheSession&) = delete;

    void save();

private:
    MemoStore& memo_;
    std::optional<std::filesystem::path> file_;
};

/// Collects machine-readable records and the files a command emits.
/// Records go to --out as JSON lines; a manifest with digests sits beside it.
class Recorder {
public:
    Recorder(std::string command, std::vector<std::string> arguments);

    void set_out(std::optional<std::string> path) { out_ = std::move(path); }
    void add(nlohmann::ordered_json record) { records_.push_back(std::move(record)); }
    void emitted(const std::filesystem::path& file) { files_.push_back(file); }
    void summary(std::string text) { summary_ = std::move(text); }

    /// Writes --out and its manifest when requested.
    void finish();

private:
    std::string command_;
    std::vector<std::string> arguments_;
    std::optional<std::string> out_;
    std::vector<nlohmann::ordered_json> records_;
    std::vector<std::filesystem::path> files_;
    std::string summary_;
    std::chrono::steady_clock::time_point start_;
};

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

} // namespace gallai::cli
