#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <utility>

#include "mzv/index.hpp"
#include "mzv/rational.hpp"

namespace mzv {

enum class ZetaKind : std::uint8_t { strict = 0, star = 1 };

/// Truncated values keyed by (kind, index, m). Lets the suffix DP resume from the largest cached
/// level instead of starting at m = 0. Thread-safe.
///
/// File layout (little endian):
///   magic "MZVC" | u32 version (1) | u64 record count
///   record: u8 kind | u32 length | u32 entries[length] | u32 m | u32 nbytes | nbytes of "n/d" ASCII
class ZetaCache {
public:
    ZetaCache() = default;
    ZetaCache(const ZetaCache&) = delete;
    ZetaCache& operator=(const ZetaCache&) = delete;

    [[nodiscard]] std::optional<BigRational> get(ZetaKind kind, const Index& index, std::uint32_t m) const;
    void put(ZetaKind kind, const Index& index, std::uint32_t m, const BigRational& value);

    /// Largest m' <= m at which every index in `indices` has a cached value (nullopt if none).
    [[nodiscard]] std::optional<std::uint32_t> common_level(ZetaKind kind, const std::vector<Index>& indices,
                                                          std::uint32_t m) const;

    [[nodiscard]] std::size_t size() const;

    /// Missing file is not an error (empty cache). Throws std::runtime_error on a corrupt file.
    void load(const std::filesystem::path& path);
    /// Throws std::runtime_error on I/O failure.
    void save(const std::filesystem::path& path) const;

private:
    using Key = std::pair<ZetaKind, Index>;
    mutable std::mutex mutex_;
    std::map<Key, std::map<std::uint32_t, BigRational>> values_;
};

}  // namespace mzv
