#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace mzv {

/// Exponent tuple (k1, ..., kn) with every ki >= 1. The empty index is valid.
class Index {
public:
    Index() = default;
    /// Throws std::invalid_argument if any entry is < 1.
    explicit Index(std::vector<std::uint32_t> entries);
    Index(std::initializer_list<std::uint32_t> entries);

    /// Repeats `value` `count` times.
    static Index repeated(std::uint32_t value, std::size_t count);

    /// Parses "2,1,3"; "" and "()" give the empty index. Throws std::invalid_argument.
    static Index parse(const std::string& text);

    [[nodiscard]] std::span<const std::uint32_t> entries() const { return entries_; }
    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] bool empty() const { return entries_.empty(); }
    [[nodiscard]] std::uint32_t operator[](std::size_t i) const { return entries_[i]; }
    [[nodiscard]] std::uint64_t weight() const;

    /// Entries from position `from` to the end.
    [[nodiscard]] Index suffix(std::size_t from) const;

    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const Index&, const Index&) = default;
    friend bool operator==(const Index&, const Index&) = default;

private:
    std::vector<std::uint32_t> entries_;
};

/// (a, b, c) with a + b = 2c and a >= 2.
class AbcParams {
public:
    /// Throws std::invalid_argument naming the violated constraint.
    AbcParams(std::uint32_t a, std::uint32_t b, std::uint32_t c);

    /// Throws std::invalid_argument on malformed input.
    static AbcParams parse(const std::string& text);

    [[nodiscard]] std::uint32_t a() const { return a_; }
    [[nodiscard]] std::uint32_t b() const { return b_; }
    [[nodiscard]] std::uint32_t c() const { return c_; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const AbcParams&, const AbcParams&) = default;

private:
    std::uint32_t a_;
    std::uint32_t b_;
    std::uint32_t c_;
};

/// The triple behind the pi-power evaluations.
inline AbcParams classical_params() { return AbcParams(3, 1, 2); }

/// Indices counted with multiplicity; one unit per interleaving pattern.
class IndexMultiset {
public:
    using Map = std::map<Index, std::uint64_t>;

    void add(const Index& index, std::uint64_t multiplicity = 1);

    [[nodiscard]] const Map& items() const { return items_; }
    [[nodiscard]] std::uint64_t multiplicity(const Index& index) const;
    [[nodiscard]] std::uint64_t total_multiplicity() const;
    [[nodiscard]] std::size_t distinct_size() const { return items_.size(); }

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    friend bool operator==(const IndexMultiset&, const IndexMultiset&) = default;

private:
    Map items_;
};

/// Visits every interleaving of `first` and `second`. `from_first[i]` tells whether position i of
/// `merged` came from `first`. Patterns are visited in lexicographic order of the positions taken
/// by `first`.
void for_each_shuffle(const Index& first, const Index& second,
                      const std::function<void(const Index& merged, const std::vector<bool>& from_first)>& visit);

IndexMultiset shuffles(const Index& first, const Index& second);

/// Shuffles of ({a,b}^p) with ({c}^q): p pairs (a,b) and q copies of c.
IndexMultiset index_family_I(std::uint32_t p, std::uint32_t q, const AbcParams& params);

/// Shuffles of (b, {a,b}^p) with ({c}^q).
IndexMultiset index_family_J(std::uint32_t p, std::uint32_t q, const AbcParams& params);

/// The non-c sequence shuffled into I_{p,q}: (a,b) repeated p times.
Index pair_sequence(std::uint32_t p, const AbcParams& params);
/// The non-c sequence shuffled into J_{p,q}: (b, a, b, ..., a, b).
Index leading_b_sequence(std::uint32_t p, const AbcParams& params);

}  // namespace mzv
