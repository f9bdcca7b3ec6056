#pragma once

// Rational parts of the pi-power evaluations for (a,b,c) = (3,1,2), and numeric comparison of
// truncated sums against them.

#include <cstdint>
#include <vector>

#include "mzv/cache.hpp"
#include "mzv/index.hpp"
#include "mzv/rational.hpp"

namespace mzv {

/// B_n from sum_{j<=n} C(n+1, j) B_j = 0, with B_1 = -1/2.
BigRational bernoulli(std::uint32_t n);

/// B_0 .. B_n by the same recurrence.
std::vector<BigRational> bernoulli_table(std::uint32_t n);

/// B_n through tangent numbers (in-place triangle); independent of the recurrence above.
BigRational bernoulli_by_tangent_numbers(std::uint32_t n);

/// (2^(2r) - 2) (-1)^(r-1) B_2r / (2r)!, the rational part of zeta*({2}^r) / pi^(2r). beta(0) = 1.
BigRational beta(std::uint32_t r);

/// rational * pi^pi_power.
struct PiCoefficient {
    BigRational rational;
    std::uint32_t pi_power = 0;
    friend bool operator==(const PiCoefficient&, const PiCoefficient&) = default;
};

/// C(2p+q, q) / ((2p+1) (4p+2q+1)!) * pi^(4p+2q).
PiCoefficient s_closed(std::uint32_t p, std::uint32_t q);

/// Explicit formula for s*(p,q) / pi^(4p+2q) in terms of C(2i+j, j), beta and factorials.
PiCoefficient s_star_closed(std::uint32_t p, std::uint32_t q);

struct ConvergenceRow {
    std::uint32_t m = 0;
    double truncated_over_pi_power = 0.0;
    double closed_form = 0.0;
    double abs_error = 0.0;
};

struct ConvergenceReport {
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    std::vector<ConvergenceRow> rows;
    /// abs_error non-increasing along the schedule.
    bool monotone = true;
};

/// Evaluates s*_m(p,q) / pi^(4p+2q) for each m in a strictly increasing schedule.
/// Throws std::invalid_argument if params != (3,1,2) or the schedule does not increase.
ConvergenceReport converge_report(std::uint32_t p, std::uint32_t q, const AbcParams& params,
                                  const std::vector<std::uint32_t>& m_schedule, ZetaCache* cache = nullptr);

}  // namespace mzv
