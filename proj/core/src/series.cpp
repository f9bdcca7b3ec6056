#include "mzv/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mzv {

namespace {

const BigRational& zero_rational() {
    static const BigRational zero(0);
    return zero;
}

BigRational power_of(const BigRational& base, std::uint32_t exponent) {
    BigRational result(1);
    for (std::uint32_t i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

// 1 / ((1 - (y-x)/L)(1 - (y+x)/L)) truncated to `bounds`, L = l^c.
BivarPoly star_prefactor(std::uint32_t l, std::uint32_t c, Bounds bounds) {
    UnivarPoly geometric = UnivarPoly::constant(BigRational(1), bounds.x + bounds.y);
    geometric.mul_geometric(inverse_power(l, c));
    return substitute_linear(geometric, BigRational(-1), BigRational(1), bounds) *
           substitute_linear(geometric, BigRational(1), BigRational(1), bounds);
}

SeriesPair unit_vector(Bounds bounds) {
    return {BivarPoly::constant(BigRational(1), bounds), BivarPoly(bounds)};
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// UnivarPoly

UnivarPoly::UnivarPoly(std::uint32_t bound) : bound_(bound), coeffs_(bound + 1, BigRational(0)) {}

UnivarPoly UnivarPoly::constant(const BigRational& value, std::uint32_t bound) {
    UnivarPoly h(bound);
    h.coeffs_[0] = value;
    return h;
}

const BigRational& UnivarPoly::coefficient(std::uint32_t degree) const {
    return degree <= bound_ ? coeffs_[degree] : zero_rational();
}

void UnivarPoly::set(std::uint32_t degree, BigRational value) {
    if (degree <= bound_) {
        coeffs_[degree] = std::move(value);
    }
}

void UnivarPoly::mul_linear(const BigRational& scale) {
    for (std::uint32_t r = bound_; r >= 1; --r) {
        coeffs_[r] += scale * coeffs_[r - 1];
    }
}

void UnivarPoly::mul_geometric(const BigRational& scale) {
    for (std::uint32_t r = 1; r <= bound_; ++r) {
        coeffs_[r] += scale * coeffs_[r - 1];
    }
}

UnivarPoly UnivarPoly::negate_variable() const {
    UnivarPoly h(*this);
    for (std::uint32_t r = 1; r <= bound_; r += 2) {
        h.coeffs_[r] = -h.coeffs_[r];
    }
    return h;
}

UnivarPoly operator*(const UnivarPoly& f, const UnivarPoly& g) {
    if (f.bound_ != g.bound_) {
        throw std::invalid_argument("univariate bound mismatch");
    }
    UnivarPoly out(f.bound_);
    for (std::uint32_t i = 0; i <= f.bound_; ++i) {
        if (sgn(f.coeffs_[i]) == 0) {
            continue;
        }
        for (std::uint32_t j = 0; i + j <= f.bound_; ++j) {
            out.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// BivarPoly

BivarPoly::BivarPoly(Bounds bounds)
    : bounds_(bounds), coeffs_(static_cast<std::size_t>(bounds.x + 1) * (bounds.y + 1), BigRational(0)) {}

BivarPoly BivarPoly::constant(const BigRational& value, Bounds bounds) { return monomial(value, 0, 0, bounds); }

BivarPoly BivarPoly::monomial(const BigRational& value, std::uint32_t dx, std::uint32_t dy, Bounds bounds) {
    BivarPoly f(bounds);
    f.set(dx, dy, value);
    return f;
}

const BigRational& BivarPoly::coefficient(std::uint32_t dx, std::uint32_t dy) const {
    if (dx > bounds_.x || dy > bounds_.y) {
        return zero_rational();
    }
    return coeffs_[slot(dx, dy)];
}

void BivarPoly::set(std::uint32_t dx, std::uint32_t dy, BigRational value) {
    if (dx <= bounds_.x && dy <= bounds_.y) {
        coeffs_[slot(dx, dy)] = std::move(value);
    }
}

std::vector<BivarPoly::Term> BivarPoly::terms() const {
    std::vector<Term> out;
    for (std::uint32_t dx = 0; dx <= bounds_.x; ++dx) {
        for (std::uint32_t dy = 0; dy <= bounds_.y; ++dy) {
            const auto& c = coeffs_[slot(dx, dy)];
            if (sgn(c) != 0) {
                out.push_back({dx, dy, c});
            }
        }
    }
    return out;
}

bool BivarPoly::is_zero() const {
    for (const auto& c : coeffs_) {
        if (sgn(c) != 0) {
            return false;
        }
    }
    return true;
}

BivarPoly BivarPoly::negate_y() const {
    BivarPoly f(*this);
    for (std::uint32_t dx = 0; dx <= bounds_.x; ++dx) {
        for (std::uint32_t dy = 1; dy <= bounds_.y; dy += 2) {
            auto& c = f.coeffs_[slot(dx, dy)];
            c = -c;
        }
    }
    return f;
}

BivarPoly BivarPoly::shifted(std::uint32_t dx, std::uint32_t dy, const BigRational& value) const {
    BivarPoly out(bounds_);
    for (std::uint32_t i = 0; i + dx <= bounds_.x; ++i) {
        for (std::uint32_t j = 0; j + dy <= bounds_.y; ++j) {
            const auto& c = coeffs_[slot(i, j)];
            if (sgn(c) != 0) {
                out.coeffs_[slot(i + dx, j + dy)] = c * value;
            }
        }
    }
    return out;
}

void BivarPoly::require_same_bounds(const BivarPoly& g) const {
    if (!(bounds_ == g.bounds_)) {
        throw std::invalid_argument("bivariate bound mismatch: (" + std::to_string(bounds_.x) + "," +
                                    std::to_string(bounds_.y) + ") vs (" + std::to_string(g.bounds_.x) + "," +
                                    std::to_string(g.bounds_.y) + ")");
    }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& g) {
    require_same_bounds(g);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += g.coeffs_[i];
    }
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& g) {
    require_same_bounds(g);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= g.coeffs_[i];
    }
    return *this;
}

BivarPoly& BivarPoly::operator*=(const BigRational& scalar) {
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

BivarPoly operator*(const BivarPoly& f, const BivarPoly& g) {
    f.require_same_bounds(g);
    const Bounds b = f.bounds_;
    BivarPoly out(b);
    BigRational product;
    for (std::uint32_t i1 = 0; i1 <= b.x; ++i1) {
        for (std::uint32_t j1 = 0; j1 <= b.y; ++j1) {
            const auto& c1 = f.coeffs_[f.slot(i1, j1)];
            if (sgn(c1) == 0) {
                continue;
            }
            for (std::uint32_t i2 = 0; i1 + i2 <= b.x; ++i2) {
                for (std::uint32_t j2 = 0; j1 + j2 <= b.y; ++j2) {
                    const auto& c2 = g.coeffs_[g.slot(i2, j2)];
                    if (sgn(c2) == 0) {
                        continue;
                    }
                    product = c1 * c2;
                    out.coeffs_[out.slot(i1 + i2, j1 + j2)] += product;
                }
            }
        }
    }
    return out;
}

BivarPoly poly_mul(const BivarPoly& f, const BivarPoly& g) { return f * g; }
BivarPoly poly_add(const BivarPoly& f, const BivarPoly& g) { return f + g; }
BivarPoly scalar_mul(const BivarPoly& f, const BigRational& scalar) { return f * scalar; }

BivarPoly substitute_linear(const UnivarPoly& h, const BigRational& alpha, const BigRational& beta, Bounds bounds) {
    BivarPoly out(bounds);
    const std::uint32_t top = std::min(h.bound(), bounds.x + bounds.y);
    for (std::uint32_t r = 0; r <= top; ++r) {
        const auto& hr = h.coefficient(r);
        if (sgn(hr) == 0) {
            continue;
        }
        // (alpha x + beta y)^r = sum_s C(r,s) alpha^s beta^(r-s) x^s y^(r-s)
        for (std::uint32_t s = 0; s <= std::min(r, bounds.x); ++s) {
            if (r - s > bounds.y) {
                continue;
            }
            BigRational term = hr * BigRational(binomial(r, s)) * power_of(alpha, s) * power_of(beta, r - s);
            out.set(s, r - s, out.coefficient(s, r - s) + term);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Mat2

Mat2 Mat2::identity(Bounds bounds) {
    return {BivarPoly::constant(BigRational(1), bounds), BivarPoly(bounds), BivarPoly(bounds),
            BivarPoly::constant(BigRational(1), bounds)};
}

std::pair<BivarPoly, BivarPoly> Mat2::apply(const BivarPoly& v0, const BivarPoly& v1) const {
    return {e00 * v0 + e01 * v1, e10 * v0 + e11 * v1};
}

Mat2 operator*(const Mat2& lhs, const Mat2& rhs) {
    return {lhs.e00 * rhs.e00 + lhs.e01 * rhs.e10, lhs.e00 * rhs.e01 + lhs.e01 * rhs.e11,
            lhs.e10 * rhs.e00 + lhs.e11 * rhs.e10, lhs.e10 * rhs.e01 + lhs.e11 * rhs.e11};
}

Mat2 operator+(const Mat2& lhs, const Mat2& rhs) {
    return {lhs.e00 + rhs.e00, lhs.e01 + rhs.e01, lhs.e10 + rhs.e10, lhs.e11 + rhs.e11};
}

Mat2 inverse_series(const Mat2& matrix) {
    const Bounds b = matrix.bounds();
    const BigRational one(1);
    if (matrix.e00.coefficient(0, 0) != one || matrix.e11.coefficient(0, 0) != one ||
        sgn(matrix.e01.coefficient(0, 0)) != 0 || sgn(matrix.e10.coefficient(0, 0)) != 0) {
        throw std::invalid_argument("inverse_series requires an identity constant term");
    }
    // A = I - N with N free of constant terms, so N^k starts at total degree k.
    const Mat2 id = Mat2::identity(b);
    const Mat2 nilpotent{id.e00 - matrix.e00, id.e01 - matrix.e01, id.e10 - matrix.e10, id.e11 - matrix.e11};
    Mat2 sum = id;
    Mat2 power = id;
    for (std::uint32_t k = 1; k <= b.x + b.y; ++k) {
        power = power * nilpotent;
        sum = sum + power;
    }
    return sum;
}

// ---------------------------------------------------------------------------------------------
// Transfer matrices and recursions

Mat2 transfer_matrix_U(std::uint32_t l, const AbcParams& params, Bounds bounds) {
    BivarPoly diagonal = BivarPoly::constant(BigRational(1), bounds);
    diagonal.set(0, 1, inverse_power(l, params.c()));
    return {diagonal, BivarPoly::monomial(inverse_power(l, params.a()), 1, 0, bounds),
            BivarPoly::monomial(inverse_power(l, params.b()), 1, 0, bounds), diagonal};
}

Mat2 transfer_matrix_V(std::uint32_t l, const AbcParams& params, Bounds bounds) {
    BivarPoly diagonal = BivarPoly::constant(BigRational(1), bounds);
    diagonal.set(0, 1, -inverse_power(l, params.c()));
    const BivarPoly prefactor = star_prefactor(l, params.c(), bounds);
    return {prefactor * diagonal, prefactor * BivarPoly::monomial(inverse_power(l, params.a()), 1, 0, bounds),
            prefactor * BivarPoly::monomial(inverse_power(l, params.b()), 1, 0, bounds), prefactor * diagonal};
}

Mat2 star_step_matrix(std::uint32_t l, const AbcParams& params, Bounds bounds) {
    BivarPoly diagonal = BivarPoly::constant(BigRational(1), bounds);
    diagonal.set(0, 1, -inverse_power(l, params.c()));
    return {diagonal, BivarPoly::monomial(-inverse_power(l, params.a()), 1, 0, bounds),
            BivarPoly::monomial(-inverse_power(l, params.b()), 1, 0, bounds), diagonal};
}

SeriesPair recursion_FG(std::uint32_t m, const AbcParams& params, Bounds bounds) {
    SeriesPair v = unit_vector(bounds);
    for (std::uint32_t l = 1; l <= m; ++l) {
        const BigRational wy = inverse_power(l, params.c());
        const BigRational wa = inverse_power(l, params.a());
        const BigRational wb = inverse_power(l, params.b());
        // F_l = F + (y/l^c) F + (x/l^a) G,  G_l = G + (y/l^c) G + (x/l^b) F
        BivarPoly next_f = v.first + v.first.shifted(0, 1, wy) + v.second.shifted(1, 0, wa);
        BivarPoly next_g = v.second + v.second.shifted(0, 1, wy) + v.first.shifted(1, 0, wb);
        v = {std::move(next_f), std::move(next_g)};
    }
    return v;
}

SeriesPair recursion_FG_star(std::uint32_t m, const AbcParams& params, Bounds bounds) {
    SeriesPair v = unit_vector(bounds);
    for (std::uint32_t l = 1; l <= m; ++l) {
        const BigRational wy = inverse_power(l, params.c());
        const BigRational wa = inverse_power(l, params.a());
        const BigRational wb = inverse_power(l, params.b());
        const BivarPoly prefactor = star_prefactor(l, params.c(), bounds);
        BivarPoly f = v.first - v.first.shifted(0, 1, wy) + v.second.shifted(1, 0, wa);
        BivarPoly g = v.second - v.second.shifted(0, 1, wy) + v.first.shifted(1, 0, wb);
        v = {prefactor * f, prefactor * g};
    }
    return v;
}

SeriesPair recursion_FG_star_by_inversion(std::uint32_t m, const AbcParams& params, Bounds bounds) {
    SeriesPair v = unit_vector(bounds);
    for (std::uint32_t l = 1; l <= m; ++l) {
        auto [f, g] = inverse_series(star_step_matrix(l, params, bounds)).apply(v.first, v.second);
        v = {std::move(f), std::move(g)};
    }
    return v;
}

UnivarPoly H_poly(std::uint32_t m, std::uint32_t c, std::uint32_t bound) {
    UnivarPoly h = UnivarPoly::constant(BigRational(1), bound);
    for (std::uint32_t l = 1; l <= m; ++l) {
        h.mul_linear(inverse_power(l, c));
    }
    return h;
}

UnivarPoly H_star_poly(std::uint32_t m, std::uint32_t c, std::uint32_t bound) {
    UnivarPoly h = UnivarPoly::constant(BigRational(1), bound);
    for (std::uint32_t l = 1; l <= m; ++l) {
        h.mul_geometric(inverse_power(l, c));
    }
    return h;
}

// ---------------------------------------------------------------------------------------------
// Identity checks

std::vector<CoefficientMismatch> compare_series(const BivarPoly& lhs, const BivarPoly& rhs) {
    if (!(lhs.bounds() == rhs.bounds())) {
        throw std::invalid_argument("compare_series: bound mismatch");
    }
    std::vector<CoefficientMismatch> out;
    const Bounds b = lhs.bounds();
    for (std::uint32_t dx = 0; dx <= b.x; ++dx) {
        for (std::uint32_t dy = 0; dy <= b.y; ++dy) {
            if (lhs.coefficient(dx, dy) != rhs.coefficient(dx, dy)) {
                out.push_back({dx, dy, lhs.coefficient(dx, dy), rhs.coefficient(dx, dy)});
            }
        }
    }
    return out;
}

namespace {

std::size_t count_nonzero_union(const BivarPoly& lhs, const BivarPoly& rhs) {
    std::size_t count = 0;
    const Bounds b = lhs.bounds();
    for (std::uint32_t dx = 0; dx <= b.x; ++dx) {
        for (std::uint32_t dy = 0; dy <= b.y; ++dy) {
            if (sgn(lhs.coefficient(dx, dy)) != 0 || sgn(rhs.coefficient(dx, dy)) != 0) {
                ++count;
            }
        }
    }
    return count;
}

}  // namespace

PolyIdentityReport check_gen_identity(std::uint32_t m, const AbcParams& params, Bounds bounds) {
    const BivarPoly lhs = recursion_FG_star(m, params, bounds).first;
    const UnivarPoly h_star = H_star_poly(m, params.c(), bounds.x + bounds.y);
    const BivarPoly rhs = recursion_FG(m, params, bounds).first.negate_y() *
                          substitute_linear(h_star, BigRational(-1), BigRational(1), bounds) *
                          substitute_linear(h_star, BigRational(1), BigRational(1), bounds);

    PolyIdentityReport report{params, m, bounds, count_nonzero_union(lhs, rhs), compare_series(lhs, rhs), false};
    report.equal = report.mismatches.empty();
    return report;
}

PolyIdentityReport check_symmetric_form(std::uint32_t m, const AbcParams& params, Bounds bounds) {
    const std::uint32_t degree = bounds.x + bounds.y;
    const UnivarPoly h = H_poly(m, params.c(), degree);
    const BivarPoly lhs = recursion_FG_star(m, params, bounds).first *
                          substitute_linear(h, BigRational(1), BigRational(-1), bounds) *
                          substitute_linear(h, BigRational(-1), BigRational(-1), bounds);
    const BivarPoly rhs = recursion_FG(m, params, bounds).first.negate_y();

    PolyIdentityReport report{params, m, bounds, count_nonzero_union(lhs, rhs), compare_series(lhs, rhs), false};

    const UnivarPoly product = H_star_poly(m, params.c(), degree) * h.negate_variable();
    const UnivarPoly one = UnivarPoly::constant(BigRational(1), degree);
    for (std::uint32_t r = 0; r <= degree; ++r) {
        if (product.coefficient(r) != one.coefficient(r)) {
            report.mismatches.push_back({r, 0, product.coefficient(r), one.coefficient(r)});
        }
    }
    report.equal = report.mismatches.empty();
    return report;
}

bool check_inverse_relation(std::uint32_t m, std::uint32_t c, std::uint32_t bound) {
    return H_star_poly(m, c, bound) * H_poly(m, c, bound).negate_variable() ==
           UnivarPoly::constant(BigRational(1), bound);
}

SumTable extract_sums(const BivarPoly& F, const BivarPoly& G, const BivarPoly& Fstar, const BivarPoly& Gstar,
                      std::uint32_t max_p, std::uint32_t max_q) {
    for (const BivarPoly* series : {&F, &G, &Fstar, &Gstar}) {
        const Bounds b = series->bounds();
        if (2 * max_p + 1 > b.x || max_q > b.y) {
            throw std::out_of_range("requested (p,q) = (" + std::to_string(max_p) + "," + std::to_string(max_q) +
                                    ") exceeds series bounds (" + std::to_string(b.x) + "," + std::to_string(b.y) +
                                    ")");
        }
    }
    SumTable table;
    table.max_p = max_p;
    table.max_q = max_q;
    auto grid = [&] { return std::vector<std::vector<BigRational>>(max_p + 1, std::vector<BigRational>(max_q + 1)); };
    table.s = grid();
    table.t = grid();
    table.s_star = grid();
    table.t_star = grid();
    for (std::uint32_t p = 0; p <= max_p; ++p) {
        for (std::uint32_t q = 0; q <= max_q; ++q) {
            table.s[p][q] = F.coefficient(2 * p, q);
            table.s_star[p][q] = Fstar.coefficient(2 * p, q);
            table.t[p][q] = G.coefficient(2 * p + 1, q);
            table.t_star[p][q] = Gstar.coefficient(2 * p + 1, q);
        }
    }

    table.parity_ok = true;
    for (const auto& term : F.terms()) table.parity_ok &= term.dx % 2 == 0;
    for (const auto& term : Fstar.terms()) table.parity_ok &= term.dx % 2 == 0;
    for (const auto& term : G.terms()) table.parity_ok &= term.dx % 2 == 1;
    for (const auto& term : Gstar.terms()) table.parity_ok &= term.dx % 2 == 1;
    return table;
}

SumTable generating_series_sums(std::uint32_t m, const AbcParams& params, std::uint32_t max_p, std::uint32_t max_q) {
    const Bounds bounds = default_bounds(max_p, max_q);
    auto strict = recursion_FG(m, params, bounds);
    auto star = recursion_FG_star(m, params, bounds);
    return extract_sums(strict.first, strict.second, star.first, star.second, max_p, max_q);
}

}  // namespace mzv
