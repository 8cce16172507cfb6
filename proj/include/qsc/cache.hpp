#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace qsc {

/// Keyed store of serialized result records, persisted as newline-delimited
/// JSON with a per-record checksum.  Corrupt or mismatched entries read as
/// misses so callers recompute and overwrite.  Writes go through a temporary
/// file and rename, so concurrent processes see either the old or the new
/// store.
class ConstantCache {
public:
    explicit ConstantCache(std::filesystem::path dir);

    std::optional<std::string> get(const std::string& key);
    void put(const std::string& key, const std::string& record);
    void invalidate(const std::string& key);

    /// Accumulated degradation notices (unreadable store, dropped entries).
    std::vector<std::string> take_warnings();

private:
    std::vector<std::pair<std::string, std::string>> load();
    void save(const std::vector<std::pair<std::string, std::string>>& entries);

    std::filesystem::path dir_;
    std::filesystem::path file_;
    std::vector<std::string> warnings_;
};

uint64_t fnv1a64(const std::string& s);

}  // namespace qsc
