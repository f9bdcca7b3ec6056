#include "mzv/cache.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

namespace {

constexpr std::array<char, 4> kMagic{'M', 'Z', 'V', 'C'};
constexpr std::uint32_t kVersion = 1;

static_assert(std::endian::native == std::endian::little, "cache file format assumes a little-endian host");

template <typename T>
void write_pod(std::ostream& os, T value) {
    os.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T read_pod(std::istream& is) {
    T value{};
    if (!is.read(reinterpret_cast<char*>(&value), sizeof(T))) {
        throw std::runtime_error("truncated cache file");
    }
    return value;
}

}  // namespace

std::optional<BigRational> ZetaCache::get(ZetaKind kind, const Index& index, std::uint32_t m) const {
    std::lock_guard lock(mutex_);
    auto it = values_.find(Key{kind, index});
    if (it == values_.end()) {
        return std::nullopt;
    }
    auto level = it->second.find(m);
    if (level == it->second.end()) {
        return std::nullopt;
    }
    return level->second;
}

void ZetaCache::put(ZetaKind kind, const Index& index, std::uint32_t m, const BigRational& value) {
    std::lock_guard lock(mutex_);
    values_[Key{kind, index}].insert_or_assign(m, value);
}

std::optional<std::uint32_t> ZetaCache::common_level(ZetaKind kind, const std::vector<Index>& indices,
                                                     std::uint32_t m) const {
    std::lock_guard lock(mutex_);
    if (indices.empty()) {
        return std::nullopt;
    }
    auto first = values_.find(Key{kind, indices.front()});
    if (first == values_.end()) {
        return std::nullopt;
    }
    // Walk candidate levels of the first index downward from m.
    const auto& levels = first->second;
    for (auto it = levels.upper_bound(m); it != levels.begin();) {
        --it;
        const std::uint32_t level = it->first;
        bool everywhere = true;
        for (std::size_t i = 1; i < indices.size() && everywhere; ++i) {
            auto other = values_.find(Key{kind, indices[i]});
            everywhere = other != values_.end() && other->second.contains(level);
        }
        if (everywhere) {
            return level;
        }
    }
    return std::nullopt;
}

std::size_t ZetaCache::size() const {
    std::lock_guard lock(mutex_);
    std::size_t total = 0;
    for (const auto& [key, levels] : values_) {
        total += levels.size();
    }
    return total;
}

void ZetaCache::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return;
    }
    std::array<char, 4> magic{};
    if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
        throw std::runtime_error("not a zeta cache file: " + path.string());
    }
    if (read_pod<std::uint32_t>(in) != kVersion) {
        throw std::runtime_error("unsupported zeta cache version: " + path.string());
    }
    const auto count = read_pod<std::uint64_t>(in);
    for (std::uint64_t r = 0; r < count; ++r) {
        const auto kind_byte = read_pod<std::uint8_t>(in);
        if (kind_byte > 1) {
            throw std::runtime_error("corrupt zeta cache record kind");
        }
        const auto length = read_pod<std::uint32_t>(in);
        std::vector<std::uint32_t> entries(length);
        for (auto& e : entries) {
            e = read_pod<std::uint32_t>(in);
        }
        const auto m = read_pod<std::uint32_t>(in);
        const auto nbytes = read_pod<std::uint32_t>(in);
        std::string text(nbytes, '\0');
        if (!in.read(text.data(), nbytes)) {
            throw std::runtime_error("truncated cache file");
        }
        put(static_cast<ZetaKind>(kind_byte), Index(std::move(entries)), m, parse_fraction(text));
    }
}

void ZetaCache::save(const std::filesystem::path& path) const {
    std::lock_guard lock(mutex_);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write zeta cache: " + path.string());
    }
    out.write(kMagic.data(), kMagic.size());
    write_pod<std::uint32_t>(out, kVersion);
    std::uint64_t count = 0;
    for (const auto& [key, levels] : values_) {
        count += levels.size();
    }
    write_pod<std::uint64_t>(out, count);
    for (const auto& [key, levels] : values_) {
        const auto& [kind, index] = key;
        for (const auto& [m, value] : levels) {
            write_pod<std::uint8_t>(out, static_cast<std::uint8_t>(kind));
            write_pod<std::uint32_t>(out, static_cast<std::uint32_t>(index.size()));
            for (std::uint32_t e : index.entries()) {
                write_pod<std::uint32_t>(out, e);
            }
            write_pod<std::uint32_t>(out, m);
            const std::string text = to_fraction_string(value);
            write_pod<std::uint32_t>(out, static_cast<std::uint32_t>(text.size()));
            out.write(text.data(), static_cast<std::streamsize>(text.size()));
        }
    }
    if (!out) {
        throw std::runtime_error("cannot write zeta cache: " + path.string());
    }
}

}  // namespace mzv
