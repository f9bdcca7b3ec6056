#include "mzv/zeta.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mzv {

namespace {

struct SuffixTable {
    std::vector<Index> suffixes;          // sorted by length, suffixes[0] is the empty index
    std::vector<std::size_t> tail;        // position of suffix minus its first entry
    std::map<Index, std::size_t> position;
};

SuffixTable build_suffix_table(const std::vector<Index>& indices) {
    std::map<Index, std::size_t> unique;
    unique.emplace(Index{}, 0);
    for (const Index& k : indices) {
        for (std::size_t from = 0; from < k.size(); ++from) {
            unique.emplace(k.suffix(from), 0);
        }
    }
    SuffixTable table;
    table.suffixes.reserve(unique.size());
    for (const auto& [suffix, unused] : unique) {
        table.suffixes.push_back(suffix);
    }
    std::stable_sort(table.suffixes.begin(), table.suffixes.end(),
                     [](const Index& x, const Index& y) { return x.size() < y.size(); });
    for (std::size_t i = 0; i < table.suffixes.size(); ++i) {
        table.position.emplace(table.suffixes[i], i);
    }
    table.tail.resize(table.suffixes.size(), 0);
    for (std::size_t i = 1; i < table.suffixes.size(); ++i) {
        table.tail[i] = table.position.at(table.suffixes[i].suffix(1));
    }
    return table;
}

std::vector<BigRational> family_sums(ZetaKind kind, const std::vector<IndexMultiset>& families, std::uint32_t m,
                                     ZetaCache* cache) {
    std::vector<Index> all;
    for (const auto& family : families) {
        for (const auto& [index, count] : family) {
            all.push_back(index);
        }
    }
    const auto values = zeta_values(kind, all, m, cache);
    std::vector<BigRational> sums;
    sums.reserve(families.size());
    std::size_t cursor = 0;
    for (const auto& family : families) {
        BigRational total = 0;
        for (const auto& [index, count] : family) {
            total += values[cursor++] * BigInt(static_cast<unsigned long>(count));
        }
        sums.push_back(total);
    }
    return sums;
}

// RHS of the finite-m identity for either family.
IdentityReport verify_identity(bool j_family, std::uint32_t p, std::uint32_t q, std::uint32_t m,
                               const AbcParams& params, CoefficientFn coefficient) {
    auto family = [&](std::uint32_t i, std::uint32_t j) {
        return j_family ? index_family_J(i, j, params) : index_family_I(i, j, params);
    };

    std::vector<IndexMultiset> strict_families;
    for (std::uint32_t i = 0; i <= p; ++i) {
        for (std::uint32_t j = 0; j <= q; ++j) {
            strict_families.push_back(family(i, j));
        }
    }
    const auto strict_sums = family_sums(ZetaKind::strict, strict_families, m, nullptr);
    auto strict_sum = [&](std::uint32_t i, std::uint32_t j) -> const BigRational& {
        return strict_sums[i * (q + 1) + j];
    };

    // zeta*_m({c}^r) for r up to 2p + q, plus the left-hand side, in one star table.
    std::vector<IndexMultiset> star_families;
    const std::uint32_t max_r = 2 * p + q;
    for (std::uint32_t r = 0; r <= max_r; ++r) {
        IndexMultiset single;
        single.add(Index::repeated(params.c(), r));
        star_families.push_back(std::move(single));
    }
    star_families.push_back(family(p, q));
    const auto star_sums = family_sums(ZetaKind::star, star_families, m, nullptr);

    BigRational rhs = 0;
    for_each_identity_term(p, q, [&](const IdentityTerm& t) {
        rhs += BigRational(coefficient(t)) * strict_sum(t.i, t.j) * star_sums[t.k + t.l] * star_sums[t.u + t.v];
    });

    IdentityReport report{params, p, q, m, star_sums.back(), rhs, false};
    report.equal = report.lhs == report.rhs;
    return report;
}

}  // namespace

std::vector<BigRational> zeta_values(ZetaKind kind, const std::vector<Index>& indices, std::uint32_t m,
                                     ZetaCache* cache) {
    const SuffixTable table = build_suffix_table(indices);
    const std::size_t n = table.suffixes.size();
    const std::vector<Index> nonempty(table.suffixes.begin() + 1, table.suffixes.end());

    std::vector<BigRational> value(n, BigRational(0));
    value[0] = 1;
    std::uint32_t start = 0;
    if (cache != nullptr && !nonempty.empty()) {
        if (auto level = cache->common_level(kind, nonempty, m)) {
            start = *level;
            for (std::size_t i = 1; i < n; ++i) {
                value[i] = *cache->get(kind, table.suffixes[i], start);
            }
        }
    }

    std::uint32_t max_exponent = 0;
    for (std::size_t i = 1; i < n; ++i) {
        max_exponent = std::max(max_exponent, table.suffixes[i][0]);
    }
    std::vector<BigRational> weight(max_exponent + 1);

    for (std::uint32_t level = start + 1; level <= m; ++level) {
        BigInt power = 1;
        for (std::uint32_t e = 1; e <= max_exponent; ++e) {
            power *= level;
            weight[e] = BigRational(BigInt(1), power);
        }
        if (kind == ZetaKind::strict) {
            // Longer suffixes first so each tail is still at level - 1.
            for (std::size_t i = n; i-- > 1;) {
                value[i] += weight[table.suffixes[i][0]] * value[table.tail[i]];
            }
        } else {
            // Shorter suffixes first so each tail is already at the current level.
            for (std::size_t i = 1; i < n; ++i) {
                value[i] += weight[table.suffixes[i][0]] * value[table.tail[i]];
            }
        }
    }

    if (cache != nullptr && m > start) {
        for (std::size_t i = 1; i < n; ++i) {
            cache->put(kind, table.suffixes[i], m, value[i]);
        }
    }

    std::vector<BigRational> out;
    out.reserve(indices.size());
    for (const Index& k : indices) {
        out.push_back(value[table.position.at(k)]);
    }
    return out;
}

BigRational zeta_value(ZetaKind kind, const Index& k, std::uint32_t m, ZetaCache* cache) {
    return zeta_values(kind, {k}, m, cache).front();
}

BigRational zeta_trunc(const Index& k, std::uint32_t m) { return zeta_value(ZetaKind::strict, k, m); }

BigRational zeta_star_trunc(const Index& k, std::uint32_t m) { return zeta_value(ZetaKind::star, k, m); }

BigRational weighted_sum(ZetaKind kind, const IndexMultiset& family, std::uint32_t m, ZetaCache* cache) {
    return family_sums(kind, {family}, m, cache).front();
}

BigRational s_direct(std::uint32_t p, std::uint32_t q, std::uint32_t m, const AbcParams& params, ZetaCache* cache) {
    return weighted_sum(ZetaKind::strict, index_family_I(p, q, params), m, cache);
}

BigRational s_star_direct(std::uint32_t p, std::uint32_t q, std::uint32_t m, const AbcParams& params,
                          ZetaCache* cache) {
    return weighted_sum(ZetaKind::star, index_family_I(p, q, params), m, cache);
}

BigRational t_direct(std::uint32_t p, std::uint32_t q, std::uint32_t m, const AbcParams& params, ZetaCache* cache) {
    return weighted_sum(ZetaKind::strict, index_family_J(p, q, params), m, cache);
}

BigRational t_star_direct(std::uint32_t p, std::uint32_t q, std::uint32_t m, const AbcParams& params,
                          ZetaCache* cache) {
    return weighted_sum(ZetaKind::star, index_family_J(p, q, params), m, cache);
}

IdentityReport verify_identity_s(std::uint32_t p, std::uint32_t q, std::uint32_t m, const AbcParams& params,
                                 CoefficientFn coefficient) {
    return verify_identity(false, p, q, m, params, coefficient);
}

IdentityReport verify_identity_t(std::uint32_t p, std::uint32_t q, std::uint32_t m, const AbcParams& params,
                                 CoefficientFn coefficient) {
    return verify_identity(true, p, q, m, params, coefficient);
}

}  // namespace mzv
