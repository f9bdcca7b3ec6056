#pragma once

// Truncated multiple zeta and zeta-star values, the shuffle sums over I_{p,q} / J_{p,q},
// and direct checks of the finite-m identities relating them.

#include <cstdint>
#include <vector>

#include "mzv/cache.hpp"
#include "mzv/identity.hpp"
#include "mzv/index.hpp"
#include "mzv/rational.hpp"

namespace mzv {

/// Sum over m >= m1 > ... > mn > 0 of prod mi^(-ki). 1 for the empty index, 0 when m < n.
BigRational zeta_trunc(const Index& k, std::uint32_t m);

/// Sum over m >= m1 >= ... >= mn >= 1. 1 for the empty index, 0 for nonempty k at m = 0.
BigRational zeta_star_trunc(const Index& k, std::uint32_t m);

BigRational zeta_value(ZetaKind kind, const Index& k, std::uint32_t m, ZetaCache* cache = nullptr);

/// Values of several indices at the same truncation, sharing one suffix table.
///
/// Runs the recurrences
///   zeta_l(k1..kn)  = zeta_{l-1}(k1..kn)  + l^(-k1) zeta_{l-1}(k2..kn)
///   zeta*_l(k1..kn) = zeta*_{l-1}(k1..kn) + l^(-k1) zeta*_l(k2..kn)
/// for l = 1..m over the set of all suffixes. With a cache, starts from the largest level at which
/// every suffix is cached and stores the level-m values back.
std::vector<BigRational> zeta_values(ZetaKind kind, const std::vector<Index>& indices, std::uint32_t m,
                                     ZetaCache* cache = nullptr);

/// Multiplicity-weighted sum of truncated values over a multiset.
BigRational weighted_sum(ZetaKind kind, const IndexMultiset& family, std::uint32_t m, ZetaCache* cache = nullptr);

BigRational s_direct(std::uint32_t p, std::uint32_t q, std::uint32_t m, const AbcParams& params,
                     ZetaCache* cache = nullptr);
BigRational s_star_direct(std::uint32_t p, std::uint32_t q, std::uint32_t m, const AbcParams& params,
                          ZetaCache* cache = nullptr);
BigRational t_direct(std::uint32_t p, std::uint32_t q, std::uint32_t m, const AbcParams& params,
                     ZetaCache* cache = nullptr);
BigRational t_star_direct(std::uint32_t p, std::uint32_t q, std::uint32_t m, const AbcParams& params,
                          ZetaCache* cache = nullptr);

/// s*_m(p,q) against the signed binomial combination of s_m(i,j) zeta*_m({c}^r) zeta*_m({c}^r').
IdentityReport verify_identity_s(std::uint32_t p, std::uint32_t q, std::uint32_t m, const AbcParams& params,
                                 CoefficientFn coefficient = identity_coefficient);

/// Same with t, t* over J_{p,q}.
IdentityReport verify_identity_t(std::uint32_t p, std::uint32_t q, std::uint32_t m, const AbcParams& params,
                                 CoefficientFn coefficient = identity_coefficient);

}  // namespace mzv
