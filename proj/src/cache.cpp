#include "qsc/cache.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qsc {

uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

ConstantCache::ConstantCache(std::filesystem::path dir)
    : dir_(std::move(dir)), file_(dir_ / "records.ndjson") {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) warnings_.push_back("cache: cannot create " + dir_.string() + ": " + ec.message());
}

std::vector<std::pair<std::string, std::string>> ConstantCache::load() {
    std::vector<std::pair<std::string, std::string>> entries;
    std::ifstream in(file_);
    if (!in) return entries;   // empty store
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            auto j = nlohmann::json::parse(line);
            std::string key = j.at("key").get<std::string>();
            std::string record = j.at("record").get<std::string>();
            std::string sum = j.at("sum").get<std::string>();
            std::ostringstream expect;
            expect << std::hex << fnv1a64(key + "\n" + record);
            if (expect.str() != sum) {
                warnings_.push_back("cache: checksum mismatch at line " +
                                    std::to_string(lineno) + ", entry dropped");
                continue;
            }
            entries.emplace_back(std::move(key), std::move(record));
        } catch (const std::exception&) {
            warnings_.push_back("cache: unparsable line " + std::to_string(lineno) +
                                ", entry dropped");
        }
    }
    return entries;
}

void ConstantCache::save(const std::vector<std::pair<std::string, std::string>>& entries) {
    std::filesystem::path tmp = file_;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
            warnings_.push_back("cache: cannot write " + tmp.string());
            return;
        }
        for (auto& [key, record] : entries) {
            std::ostringstream sum;
            sum << std::hex << fnv1a64(key + "\n" + record);
            nlohmann::json j;
            j["key"] = key;
            j["sum"] = sum.str();
            j["record"] = record;
            out << j.dump() << "\n";
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, file_, ec);
    if (ec) warnings_.push_back("cache: rename failed: " + ec.message());
}

std::optional<std::string> ConstantCache::get(const std::string& key) {
    for (auto& [k, record] : load())
        if (k == key) return record;
    return std::nullopt;
}

void ConstantCache::put(const std::string& key, const std::string& record) {
    auto entries = load();
    bool replaced = false;
    for (auto& [k, r] : entries)
        if (k == key) {
            r = record;
            replaced = true;
        }
    if (!replaced) entries.emplace_back(key, record);
    save(entries);
}

void ConstantCache::invalidate(const std::string& key) {
    auto entries = load();
    std::erase_if(entries, [&](const auto& e) { return e.first == key; });
    save(entries);
}

std::vector<std::string> ConstantCache::take_warnings() {
    std::vector<std::string> w;
    w.swap(warnings_);
    return w;
}

}  // namespace qsc
