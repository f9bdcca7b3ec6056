#pragma once

// Truncated power series in x, y (and z) with exact coefficients, the 2x2 transfer-matrix
// recursions producing the generating series of s_m, t_m, s*_m, t*_m, and exact checks of the
// generating-series identities.

#include <cstdint>
#include <utility>
#include <vector>

#include "mzv/index.hpp"
#include "mzv/rational.hpp"

namespace mzv {

struct Bounds {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Bounds that hold s(p,q) and t(p,q) for every p <= max_p, q <= max_q: (2 max_p + 1, max_q).
inline Bounds default_bounds(std::uint32_t max_p, std::uint32_t max_q) { return {2 * max_p + 1, max_q}; }

/// Polynomial in z, terms above `bound` discarded.
class UnivarPoly {
public:
    explicit UnivarPoly(std::uint32_t bound);
    static UnivarPoly constant(const BigRational& value, std::uint32_t bound);

    [[nodiscard]] std::uint32_t bound() const { return bound_; }
    [[nodiscard]] const BigRational& coefficient(std::uint32_t degree) const;
    void set(std::uint32_t degree, BigRational value);

    /// Multiplies in place by (1 + scale z).
    void mul_linear(const BigRational& scale);
    /// Multiplies in place by 1 / (1 - scale z), expanded as a geometric series.
    void mul_geometric(const BigRational& scale);
    /// h(z) -> h(-z).
    [[nodiscard]] UnivarPoly negate_variable() const;

    friend UnivarPoly operator*(const UnivarPoly& f, const UnivarPoly& g);
    friend bool operator==(const UnivarPoly&, const UnivarPoly&) = default;

private:
    std::uint32_t bound_;
    std::vector<BigRational> coeffs_;
};

/// Polynomial in x, y; terms with deg_x > bounds.x or deg_y > bounds.y are discarded.
/// Dense storage, so equality is coefficient-wise.
class BivarPoly {
public:
    explicit BivarPoly(Bounds bounds);
    static BivarPoly constant(const BigRational& value, Bounds bounds);
    static BivarPoly monomial(const BigRational& value, std::uint32_t dx, std::uint32_t dy, Bounds bounds);

    [[nodiscard]] Bounds bounds() const { return bounds_; }
    /// Zero for degrees beyond the bounds.
    [[nodiscard]] const BigRational& coefficient(std::uint32_t dx, std::uint32_t dy) const;
    /// Ignored beyond the bounds.
    void set(std::uint32_t dx, std::uint32_t dy, BigRational value);

    struct Term {
        std::uint32_t dx;
        std::uint32_t dy;
        BigRational value;
    };
    /// Nonzero terms, ordered by (dx, dy).
    [[nodiscard]] std::vector<Term> terms() const;
    [[nodiscard]] bool is_zero() const;

    /// f(x, y) -> f(x, -y).
    [[nodiscard]] BivarPoly negate_y() const;
    /// Multiplies by value * x^dx y^dy.
    [[nodiscard]] BivarPoly shifted(std::uint32_t dx, std::uint32_t dy, const BigRational& value) const;

    BivarPoly& operator+=(const BivarPoly& g);
    BivarPoly& operator-=(const BivarPoly& g);
    BivarPoly& operator*=(const BigRational& scalar);

    friend BivarPoly operator+(BivarPoly f, const BivarPoly& g) { return f += g; }
    friend BivarPoly operator-(BivarPoly f, const BivarPoly& g) { return f -= g; }
    friend BivarPoly operator*(BivarPoly f, const BigRational& scalar) { return f *= scalar; }
    /// Truncated product. Throws std::invalid_argument when bounds differ.
    friend BivarPoly operator*(const BivarPoly& f, const BivarPoly& g);
    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

private:
    [[nodiscard]] std::size_t slot(std::uint32_t dx, std::uint32_t dy) const { return dx * (bounds_.y + 1) + dy; }
    void require_same_bounds(const BivarPoly& g) const;

    Bounds bounds_;
    std::vector<BigRational> coeffs_;
};

BivarPoly poly_mul(const BivarPoly& f, const BivarPoly& g);
BivarPoly poly_add(const BivarPoly& f, const BivarPoly& g);
BivarPoly scalar_mul(const BivarPoly& f, const BigRational& scalar);
/// h(alpha x + beta y), truncated to `bounds`.
BivarPoly substitute_linear(const UnivarPoly& h, const BigRational& alpha, const BigRational& beta, Bounds bounds);

/// 2x2 matrix over truncated bivariate series, all entries sharing bounds.
struct Mat2 {
    BivarPoly e00, e01, e10, e11;

    static Mat2 identity(Bounds bounds);
    [[nodiscard]] Bounds bounds() const { return e00.bounds(); }
    [[nodiscard]] std::pair<BivarPoly, BivarPoly> apply(const BivarPoly& v0, const BivarPoly& v1) const;

    friend Mat2 operator*(const Mat2& lhs, const Mat2& rhs);
    friend Mat2 operator+(const Mat2& lhs, const Mat2& rhs);
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Inverse of a matrix whose constant part is the identity, as a Neumann series truncated to the
/// bounds. Throws std::invalid_argument if the constant part is not the identity.
Mat2 inverse_series(const Mat2& matrix);

/// U_l = [[1 + y/l^c, x/l^a], [x/l^b, 1 + y/l^c]].
Mat2 transfer_matrix_U(std::uint32_t l, const AbcParams& params, Bounds bounds);
/// V_l = [(1 - (y-x)/l^c)(1 - (y+x)/l^c)]^(-1) [[1 - y/l^c, x/l^a], [x/l^b, 1 - y/l^c]].
Mat2 transfer_matrix_V(std::uint32_t l, const AbcParams& params, Bounds bounds);
/// [[1 - y/l^c, -x/l^a], [-x/l^b, 1 - y/l^c]], whose inverse is V_l when a + b = 2c.
Mat2 star_step_matrix(std::uint32_t l, const AbcParams& params, Bounds bounds);

struct SeriesPair {
    BivarPoly first;   // F (coefficients s_m(p,q) at x^2p y^q)
    BivarPoly second;  // G (coefficients t_m(p,q) at x^(2p+1) y^q)
};

/// (F_m, G_m) = U_m ... U_1 (1, 0).
SeriesPair recursion_FG(std::uint32_t m, const AbcParams& params, Bounds bounds);
/// (F*_m, G*_m) = V_m ... V_1 (1, 0).
SeriesPair recursion_FG_star(std::uint32_t m, const AbcParams& params, Bounds bounds);
/// Same product, with each V_l obtained by inverting star_step_matrix(l) as a series.
SeriesPair recursion_FG_star_by_inversion(std::uint32_t m, const AbcParams& params, Bounds bounds);

/// H_m(z) = prod_{l<=m} (1 + z/l^c); coefficient r is zeta_m({c}^r).
UnivarPoly H_poly(std::uint32_t m, std::uint32_t c, std::uint32_t bound);
/// H*_m(z) = prod_{l<=m} (1 - z/l^c)^(-1); coefficient r is zeta*_m({c}^r).
UnivarPoly H_star_poly(std::uint32_t m, std::uint32_t c, std::uint32_t bound);

struct CoefficientMismatch {
    std::uint32_t dx;
    std::uint32_t dy;
    BigRational lhs;
    BigRational rhs;
};

/// Outcome of comparing two truncated series coefficient by coefficient.
struct PolyIdentityReport {
    AbcParams params;
    std::uint32_t m = 0;
    Bounds bounds;
    std::size_t compared_terms = 0;  // nonzero coefficients on either side
    std::vector<CoefficientMismatch> mismatches;
    bool equal = false;
};

/// Coefficient-wise comparison of two series with equal bounds.
std::vector<CoefficientMismatch> compare_series(const BivarPoly& lhs, const BivarPoly& rhs);

/// F*_m(x,y) = F_m(x,-y) H*_m(y-x) H*_m(y+x) below the bounds.
PolyIdentityReport check_gen_identity(std::uint32_t m, const AbcParams& params, Bounds bounds);

/// F*_m(x,y) H_m(x-y) H_m(-x-y) = F_m(x,-y) below the bounds, together with
/// H*_m(z) H_m(-z) = 1 up to degree bounds.x + bounds.y (mismatches there are reported at dy = 0).
PolyIdentityReport check_symmetric_form(std::uint32_t m, const AbcParams& params, Bounds bounds);

/// H*_m(z) H_m(-z) = 1 up to degree `bound`.
bool check_inverse_relation(std::uint32_t m, std::uint32_t c, std::uint32_t bound);

/// s, t, s*, t* read off the four generating series, indexed [p][q].
struct SumTable {
    std::uint32_t max_p = 0;
    std::uint32_t max_q = 0;
    std::vector<std::vector<BigRational>> s, t, s_star, t_star;
    /// F, F* carry only even x-degrees and G, G* only odd ones.
    bool parity_ok = false;
};

/// Throws std::out_of_range if the bounds cannot hold x^(2 max_p + 1) y^max_q.
SumTable extract_sums(const BivarPoly& F, const BivarPoly& G, const BivarPoly& Fstar, const BivarPoly& Gstar,
                      std::uint32_t max_p, std::uint32_t max_q);

/// Runs both recursions at default bounds and extracts the table.
SumTable generating_series_sums(std::uint32_t m, const AbcParams& params, std::uint32_t max_p, std::uint32_t max_q);

}  // namespace mzv
