#include "mzv/index.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mzv {

namespace {

std::vector<std::uint32_t> parse_uint_list(const std::string& text, const char* what) {
    std::vector<std::uint32_t> values;
    std::string trimmed;
    for (char ch : text) {
        if (ch != ' ' && ch != '(' && ch != ')') {
            trimmed.push_back(ch);
        }
    }
    if (trimmed.empty()) {
        return values;
    }
    std::size_t start = 0;
    while (start <= trimmed.size()) {
        const std::size_t comma = std::min(trimmed.find(',', start), trimmed.size());
        const char* first = trimmed.data() + start;
        const char* last = trimmed.data() + comma;
        std::uint32_t value = 0;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (first == last || ec != std::errc() || ptr != last) {
            throw std::invalid_argument(std::string("malformed ") + what + ": '" + text + "'");
        }
        values.push_back(value);
        start = comma + 1;
    }
    return values;
}

}  // namespace

Index::Index(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {
    for (std::uint32_t k : entries_) {
        if (k < 1) {
            throw std::invalid_argument("index entries must be >= 1");
        }
    }
}

Index::Index(std::initializer_list<std::uint32_t> entries) : Index(std::vector<std::uint32_t>(entries)) {}

Index Index::repeated(std::uint32_t value, std::size_t count) {
    return Index(std::vector<std::uint32_t>(count, value));
}

Index Index::parse(const std::string& text) { return Index(parse_uint_list(text, "index")); }

std::uint64_t Index::weight() const {
    return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

Index Index::suffix(std::size_t from) const {
    Index out;
    out.entries_.assign(entries_.begin() + static_cast<std::ptrdiff_t>(std::min(from, entries_.size())),
                        entries_.end());
    return out;
}

std::string Index::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        os << (i ? "," : "") << entries_[i];
    }
    os << ')';
    return os.str();
}

AbcParams::AbcParams(std::uint32_t a, std::uint32_t b, std::uint32_t c) : a_(a), b_(b), c_(c) {
    if (a < 1 || b < 1 || c < 1) {
        throw std::invalid_argument("a, b, c must be positive integers");
    }
    if (std::uint64_t{a} + b != 2 * std::uint64_t{c}) {
        throw std::invalid_argument("a+b must equal 2c");
    }
    if (a < 2) {
        throw std::invalid_argument("a must be >= 2");
    }
}

AbcParams AbcParams::parse(const std::string& text) {
    const auto values = parse_uint_list(text, "a,b,c triple");
    if (values.size() != 3) {
        throw std::invalid_argument("expected three comma-separated integers a,b,c");
    }
    return AbcParams(values[0], values[1], values[2]);
}

std::string AbcParams::to_string() const {
    return std::to_string(a_) + "," + std::to_string(b_) + "," + std::to_string(c_);
}

void IndexMultiset::add(const Index& index, std::uint64_t multiplicity) {
    if (multiplicity == 0) {
        return;
    }
    items_[index] += multiplicity;
}

std::uint64_t IndexMultiset::multiplicity(const Index& index) const {
    auto it = items_.find(index);
    return it == items_.end() ? 0 : it->second;
}

std::uint64_t IndexMultiset::total_multiplicity() const {
    std::uint64_t total = 0;
    for (const auto& [index, count] : items_) {
        total += count;
    }
    return total;
}

void for_each_shuffle(const Index& first, const Index& second,
                      const std::function<void(const Index& merged, const std::vector<bool>& from_first)>& visit) {
    const std::size_t n1 = first.size();
    const std::size_t n = n1 + second.size();

    // Pattern = which of the n slots hold letters of `first`; iterate combinations lexicographically.
    std::vector<std::size_t> slots(n1);
    std::iota(slots.begin(), slots.end(), std::size_t{0});
    std::vector<bool> from_first(n);
    std::vector<std::uint32_t> merged(n);

    while (true) {
        std::fill(from_first.begin(), from_first.end(), false);
        for (std::size_t s : slots) {
            from_first[s] = true;
        }
        std::size_t i1 = 0;
        std::size_t i2 = 0;
        for (std::size_t pos = 0; pos < n; ++pos) {
            merged[pos] = from_first[pos] ? first[i1++] : second[i2++];
        }
        visit(Index(merged), from_first);

        // Next combination of n1 slots out of n.
        std::size_t j = n1;
        while (j > 0 && slots[j - 1] == n - n1 + (j - 1)) {
            --j;
        }
        if (j == 0) {
            return;
        }
        ++slots[j - 1];
        for (std::size_t t = j; t < n1; ++t) {
            slots[t] = slots[t - 1] + 1;
        }
    }
}

IndexMultiset shuffles(const Index& first, const Index& second) {
    IndexMultiset out;
    for_each_shuffle(first, second, [&](const Index& merged, const std::vector<bool>&) { out.add(merged); });
    return out;
}

Index pair_sequence(std::uint32_t p, const AbcParams& params) {
    std::vector<std::uint32_t> seq;
    seq.reserve(2 * p);
    for (std::uint32_t i = 0; i < p; ++i) {
        seq.push_back(params.a());
        seq.push_back(params.b());
    }
    return Index(std::move(seq));
}

Index leading_b_sequence(std::uint32_t p, const AbcParams& params) {
    std::vector<std::uint32_t> seq{params.b()};
    for (std::uint32_t i = 0; i < p; ++i) {
        seq.push_back(params.a());
        seq.push_back(params.b());
    }
    return Index(std::move(seq));
}

IndexMultiset index_family_I(std::uint32_t p, std::uint32_t q, const AbcParams& params) {
    return shuffles(pair_sequence(p, params), Index::repeated(params.c(), q));
}

IndexMultiset index_family_J(std::uint32_t p, std::uint32_t q, const AbcParams& params) {
    return shuffles(leading_b_sequence(p, params), Index::repeated(params.c(), q));
}

}  // namespace mzv
