#pragma once

// Test-only reference implementations. They share nothing with the library's evaluation paths:
// zeta values by enumerating every monotone tuple, shuffles by recursive interleaving.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "mzv/rational.hpp"

namespace mzv::oracle {

using Tuple = std::vector<std::uint32_t>;

/// Enumerates m >= m1 > m2 > ... (strict) or m >= m1 >= m2 >= ... (weak), all mi >= 1.
inline BigRational naive_zeta(const Tuple& k, std::uint32_t m, bool star) {
    if (k.empty()) {
        return 1;
    }
    BigRational total = 0;
    Tuple chosen(k.size());
    std::function<void(std::size_t, std::uint32_t)> descend = [&](std::size_t depth, std::uint32_t upper) {
        if (depth == k.size()) {
            BigInt den = 1;
            for (std::size_t i = 0; i < k.size(); ++i) {
                BigInt power;
                mpz_ui_pow_ui(power.get_mpz_t(), chosen[i], k[i]);
                den *= power;
            }
            total += BigRational(BigInt(1), den);
            return;
        }
        for (std::uint32_t v = 1; v <= upper; ++v) {
            chosen[depth] = v;
            descend(depth + 1, star ? v : v - 1);
        }
    };
    descend(0, m);
    total.canonicalize();
    return total;
}

/// All interleavings with multiplicity, by recursion on the first letter.
inline std::map<Tuple, std::uint64_t> naive_shuffles(const Tuple& s1, const Tuple& s2) {
    std::map<Tuple, std::uint64_t> out;
    Tuple prefix;
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) {
        if (i == s1.size() && j == s2.size()) {
            ++out[prefix];
            return;
        }
        if (i < s1.size()) {
            prefix.push_back(s1[i]);
            go(i + 1, j);
            prefix.pop_back();
        }
        if (j < s2.size()) {
            prefix.push_back(s2[j]);
            go(i, j + 1);
            prefix.pop_back();
        }
    };
    go(0, 0);
    return out;
}

/// Every tuple of length <= max_len with entries in [1, max_entry].
inline std::vector<Tuple> all_tuples(std::size_t max_len, std::uint32_t max_entry) {
    std::vector<Tuple> out{{}};
    std::vector<Tuple> frontier{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Tuple> next;
        for (const auto& t : frontier) {
            for (std::uint32_t e = 1; e <= max_entry; ++e) {
                Tuple grown(t);
                grown.push_back(e);
                next.push_back(grown);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

}  // namespace mzv::oracle
