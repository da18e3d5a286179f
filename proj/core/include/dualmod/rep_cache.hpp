#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dualmod/bit_matrix.hpp"
#include "dualmod/representation.hpp"
#include "dualmod/specht.hpp"

namespace dualmod::cache {

/// Environment variable naming the default cache directory.
inline constexpr const char* kCacheDirEnv = "DUALMOD_CACHE_DIR";
inline constexpr std::uint32_t kFormatVersion = 1;

class CacheFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A representation plus an optional invariant form. Layout is documented in
/// docs/representation_cache.md.
struct CacheRecord {
    Representation rep;
    std::optional<BitMatrixF2> form;

    friend bool operator==(const CacheRecord&, const CacheRecord&) = default;
};

std::vector<std::uint8_t> serialize(const CacheRecord& record);
/// Throws CacheFormatError on bad magic, version, checksum or truncation.
CacheRecord deserialize(std::span<const std::uint8_t> bytes);

void save(const CacheRecord& record, const std::filesystem::path& file);
CacheRecord load(const std::filesystem::path& file);

/// Directory of D^lambda records, one file per shape.
class RepresentationCache {
public:
    explicit RepresentationCache(std::filesystem::path dir);

    /// From kCacheDirEnv, if set and non-empty.
    static std::optional<RepresentationCache> from_environment();

    const std::filesystem::path& dir() const noexcept { return dir_; }
    std::filesystem::path path_for(const Partition& lambda) const;

    /// nullopt when absent; a corrupt file is treated as absent.
    std::optional<CacheRecord> get(const Partition& lambda) const;
    /// Writes atomically (temporary file, then rename).
    void put(const Partition& lambda, const CacheRecord& record) const;

private:
    std::filesystem::path dir_;
};

/// D^lambda over F2 with its form, read from `cache` when present and
/// stored there after a fresh build.
CacheRecord d_module_record(const Partition& lambda, const specht::Options& options,
                            const RepresentationCache* cache);

}  // namespace dualmod::cache
