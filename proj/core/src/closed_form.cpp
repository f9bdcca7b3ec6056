#include "mzv/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mzv/identity.hpp"
#include "mzv/zeta.hpp"

namespace mzv {

std::vector<BigRational> bernoulli_table(std::uint32_t n) {
    std::vector<BigRational> table;
    table.reserve(n + 1);
    table.emplace_back(1);
    for (std::uint32_t i = 1; i <= n; ++i) {
        BigRational acc = 0;
        for (std::uint32_t j = 0; j < i; ++j) {
            acc += BigRational(binomial(i + 1, j)) * table[j];
        }
        table.push_back(-acc / BigRational(i + 1));
    }
    return table;
}

BigRational bernoulli(std::uint32_t n) { return bernoulli_table(n).back(); }

BigRational bernoulli_by_tangent_numbers(std::uint32_t n) {
    if (n == 0) {
        return 1;
    }
    if (n == 1) {
        return BigRational(-1, 2);
    }
    if (n % 2 == 1) {
        return 0;
    }
    // Tangent numbers T_1..T_K (1, 2, 16, 272, ...), then
    // B_2k = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)).
    const std::uint32_t kmax = n / 2;
    std::vector<BigInt> tangent(kmax + 1);
    tangent[1] = 1;
    for (std::uint32_t k = 2; k <= kmax; ++k) {
        tangent[k] = tangent[k - 1] * (k - 1);
    }
    for (std::uint32_t k = 2; k <= kmax; ++k) {
        for (std::uint32_t j = k; j <= kmax; ++j) {
            tangent[j] = tangent[j - 1] * (j - k) + tangent[j] * (j - k + 2);
        }
    }
    BigInt four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, kmax);
    BigRational value(BigInt(2 * kmax) * tangent[kmax], four_k * (four_k - 1));
    value.canonicalize();
    return sign_power(kmax - 1) > 0 ? value : BigRational(-value);
}

BigRational beta(std::uint32_t r) {
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * r);
    // (-1)^(r-1) has the same parity as (-1)^(r+1); r = 0 gives -1.
    BigRational value = BigRational(two_pow - 2) * bernoulli(2 * r) / BigRational(factorial(2 * r));
    return sign_power(r + 1) > 0 ? value : BigRational(-value);
}

PiCoefficient s_closed(std::uint32_t p, std::uint32_t q) {
    BigRational rational(binomial(2 * p + q, q), BigInt(2 * p + 1) * factorial(4 * p + 2 * q + 1));
    rational.canonicalize();
    return {rational, 4 * p + 2 * q};
}

PiCoefficient s_star_closed(std::uint32_t p, std::uint32_t q) {
    std::vector<BigRational> betas;
    for (std::uint32_t r = 0; r <= 2 * p + q; ++r) {
        betas.push_back(beta(r));
    }
    BigRational total = 0;
    for_each_identity_term(p, q, [&](const IdentityTerm& t) {
        BigRational base(binomial(2 * t.i + t.j, t.j), BigInt(2 * t.i + 1) * factorial(4 * t.i + 2 * t.j + 1));
        base.canonicalize();
        total += BigRational(identity_coefficient(t)) * base * betas[t.k + t.l] * betas[t.u + t.v];
    });
    return {total, 4 * p + 2 * q};
}

ConvergenceReport converge_report(std::uint32_t p, std::uint32_t q, const AbcParams& params,
                                  const std::vector<std::uint32_t>& m_schedule, ZetaCache* cache) {
    if (!(params == classical_params())) {
        throw std::invalid_argument("closed forms are only known for (a,b,c) = (3,1,2)");
    }
    for (std::size_t i = 1; i < m_schedule.size(); ++i) {
        if (m_schedule[i] <= m_schedule[i - 1]) {
            throw std::invalid_argument("m schedule must be strictly increasing");
        }
    }

    const PiCoefficient closed = s_star_closed(p, q);
    const double pi_power = std::pow(std::numbers::pi, static_cast<double>(closed.pi_power));
    const double closed_value = to_double(closed.rational);

    // A local cache lets each level resume from the previous one.
    ZetaCache local;
    ZetaCache* active = cache != nullptr ? cache : &local;

    ConvergenceReport report{p, q, {}, true};
    for (std::uint32_t m : m_schedule) {
        const double truncated = to_double(s_star_direct(p, q, m, params, active)) / pi_power;
        const double error = std::abs(truncated - closed_value);
        if (!report.rows.empty() && error > report.rows.back().abs_error) {
            report.monotone = false;
        }
        report.rows.push_back({m, truncated, closed_value, error});
    }
    return report;
}

}  // namespace mzv
