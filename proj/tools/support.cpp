#include "support.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace gallai::cli {

namespace fs = std::filesystem;

std::string sha256_hex(const fs::path& file)
{
    const std::string data = read_text_file(file);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed for " + file.string());
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i)
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return hex.str();
}

void write_text_file(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out)
        throw std::runtime_error("write failed for " + path.string());
}

std::string read_text_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CacheSession::CacheSession(MemoStore& memo, bool enabled) : memo_(memo)
{
    const char* dir = std::getenv(kCacheEnv);
    if (!enabled || dir == nullptr || *dir == '\0')
        return;
    file_ = fs::path(dir) / "memo-v1.txt";
    std::ifstream in(*file_);
    if (!in)
        return;
    if (auto problem = memo_.load(in))
        std::cerr << "warning: ignoring cache " << file_->string() << ": " << *problem << '\n';
}

CacheSession::~CacheSession()
{
    try {
        save();
    }
    catch (const std::exception& e) {
        std::cerr << "warning: cache not saved: " << e.what() << '\n';
    }
}

void CacheSession::save()
{
    if (!file_)
        return;
    fs::create_directories(file_->parent_path());
    const fs::path tmp = file_->string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
        memo_.save(out);
        if (!out)
            throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, *file_);
}

Recorder::Recorder(std::string command, std::vector<std::string> arguments)
    : command_(std::move(command)), arguments_(std::move(arguments)), start_(std::chrono::steady_clock::now())
{
}

void Recorder::finish()
{
    if (!out_)
        return;
    std::string body;
    for (const auto& r : records_)
        body += r.dump() + "\n";
    write_text_file(*out_, body);

    nlohmann::ordered_json manifest;
    manifest["command"] = command_;
    manifest["arguments"] = arguments_;
    manifest["version"] = kVersion;
    manifest["wall_time_s"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    manifest["summary"] = summary_;
    auto files = nlohmann::ordered_json::array();
    std::vector<fs::path> all{fs::path(*out_)};
    all.insert(all.end(), files_.begin(), files_.end());
    for (const auto& f : all)
        files.push_back({{"path", f.string()}, {"sha256", sha256_hex(f)}});
    manifest["files"] = files;
    write_text_file(*out_ + ".manifest.json", manifest.dump(2) + "\n");
}

} // namespace gallai::cli
