#pragma once

// The summation pattern shared by the finite-m identity, its harmonic-algebra
// counterpart and the explicit pi-power formula:
//
//   sum over 2i+k+u = 2p, j+l+v = q of (-1)^(j+k) C(k+l,k) C(u+v,u) * X(i,j) * Y(k+l) * Y(u+v)

#include <cstdint>

#include "mzv/index.hpp"
#include "mzv/rational.hpp"

namespace mzv {

struct IdentityTerm {
    std::uint32_t i, j, k, l, u, v;
};

/// (-1)^(j+k) * C(k+l, k) * C(u+v, u).
BigInt identity_coefficient(const IdentityTerm& term);

/// Coefficient rule used when assembling a right-hand side. Tests substitute a deliberately wrong
/// rule to prove that mismatches are detected.
using CoefficientFn = BigInt (*)(const IdentityTerm&);

/// Visits every (i,j,k,l,u,v) with 2i+k+u = 2p and j+l+v = q.
template <typename Visitor>
void for_each_identity_term(std::uint32_t p, std::uint32_t q, Visitor&& visit) {
    for (std::uint32_t i = 0; i <= p; ++i) {
        const std::uint32_t ku = 2 * (p - i);
        for (std::uint32_t k = 0; k <= ku; ++k) {
            for (std::uint32_t j = 0; j <= q; ++j) {
                const std::uint32_t lv = q - j;
                for (std::uint32_t l = 0; l <= lv; ++l) {
                    visit(IdentityTerm{i, j, k, l, ku - k, lv - l});
                }
            }
        }
    }
}

/// One instance of a scalar identity at fixed (params, p, q, m).
struct IdentityReport {
    AbcParams params;
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    std::uint32_t m = 0;
    BigRational lhs;
    BigRational rhs;
    bool equal = false;
};

}  // namespace mzv
