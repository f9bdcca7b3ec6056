#include <doctest.h>

#include "mzv/series.hpp"
#include "mzv/zeta.hpp"

using namespace mzv;

namespace {

const AbcParams kClassical(3, 1, 2);

BigRational q(const char* text) { return parse_fraction(text); }

BivarPoly linear_x(std::int64_t sign, Bounds b) {
    BivarPoly f = BivarPoly::constant(BigRational(1), b);
    f.set(1, 0, BigRational(static_cast<long>(sign)));
    return f;
}

}  // namespace

TEST_CASE("truncated products") {
    const Bounds wide{2, 0};
    BivarPoly expected = BivarPoly::constant(BigRational(1), wide);
    expected.set(2, 0, BigRational(-1));
    CHECK(poly_mul(linear_x(1, wide), linear_x(-1, wide)) == expected);

    const Bounds narrow{1, 0};
    CHECK(poly_mul(linear_x(1, narrow), linear_x(-1, narrow)) == BivarPoly::constant(BigRational(1), narrow));

    CHECK_THROWS_AS(poly_mul(linear_x(1, wide), linear_x(1, narrow)), std::invalid_argument);
    CHECK_THROWS_AS(poly_add(linear_x(1, wide), linear_x(1, narrow)), std::invalid_argument);
    CHECK(scalar_mul(linear_x(1, wide), q("1/2")).coefficient(1, 0) == q("1/2"));
}

TEST_CASE("linear substitution") {
    UnivarPoly h = UnivarPoly::constant(BigRational(1), 1);
    h.set(1, BigRational(1));
    const Bounds b{1, 1};
    BivarPoly expected(b);
    expected.set(0, 0, BigRational(1));
    expected.set(1, 0, BigRational(1));
    expected.set(0, 1, BigRational(-1));
    CHECK(substitute_linear(h, BigRational(1), BigRational(-1), b) == expected);

    // (1+z)^2 -> (1 + x + 2y)^2 with bounds (2,2)
    UnivarPoly sq = UnivarPoly::constant(BigRational(1), 2);
    sq.mul_linear(BigRational(1));
    sq.mul_linear(BigRational(1));
    const BivarPoly image = substitute_linear(sq, BigRational(1), BigRational(2), {2, 2});
    CHECK(image.coefficient(0, 0) == 1);
    CHECK(image.coefficient(1, 0) == 2);
    CHECK(image.coefficient(0, 1) == 4);
    CHECK(image.coefficient(2, 0) == 1);
    CHECK(image.coefficient(1, 1) == 4);
    CHECK(image.coefficient(0, 2) == 4);
}

TEST_CASE("H polynomials") {
    CHECK(H_poly(0, 2, 5) == UnivarPoly::constant(BigRational(1), 5));
    const UnivarPoly h = H_poly(2, 2, 2);
    CHECK(h.coefficient(0) == 1);
    CHECK(h.coefficient(1) == q("5/4"));
    CHECK(h.coefficient(2) == q("1/4"));
    const UnivarPoly hs = H_star_poly(2, 2, 2);
    CHECK(hs.coefficient(1) == q("5/4"));
    CHECK(hs.coefficient(2) == q("21/16"));

    for (std::uint32_t m = 0; m <= 6; ++m) {
        const UnivarPoly strict = H_poly(m, 3, 5);
        const UnivarPoly star = H_star_poly(m, 3, 5);
        for (std::uint32_t r = 0; r <= 5; ++r) {
            CHECK(strict.coefficient(r) == zeta_trunc(Index::repeated(3, r), m));
            CHECK(star.coefficient(r) == zeta_star_trunc(Index::repeated(3, r), m));
        }
    }
}

TEST_CASE("inverse relation H*(z) H(-z) = 1") {
    for (std::uint32_t m = 0; m <= 30; ++m) {
        for (std::uint32_t bound = 0; bound <= 10; ++bound) {
            CHECK(check_inverse_relation(m, 2, bound));
        }
    }
}

TEST_CASE("transfer recursion base cases") {
    const Bounds b{3, 3};
    const auto zero = recursion_FG(0, kClassical, b);
    CHECK(zero.first == BivarPoly::constant(BigRational(1), b));
    CHECK(zero.second.is_zero());
    const auto star_zero = recursion_FG_star(0, kClassical, b);
    CHECK(star_zero.first == BivarPoly::constant(BigRational(1), b));
    CHECK(star_zero.second.is_zero());

    const auto one = recursion_FG(1, kClassical, b);
    BivarPoly f1 = BivarPoly::constant(BigRational(1), b);
    f1.set(0, 1, BigRational(1));
    CHECK(one.first == f1);
    CHECK(one.second == BivarPoly::monomial(BigRational(1), 1, 0, b));

    CHECK(recursion_FG(2, kClassical, b).first.coefficient(2, 0) == s_direct(1, 0, 2, kClassical));
    CHECK(recursion_FG(2, kClassical, b).first.coefficient(2, 0) == q("1/8"));

    CHECK(recursion_FG_star(1, kClassical, {2, 2}).first.coefficient(0, 1) == 1);
}

TEST_CASE("U-products are exact polynomials once bounds cover the degree") {
    // Each U_l raises total degree by at most one.
    const auto small = recursion_FG(4, kClassical, {4, 4});
    const auto large = recursion_FG(4, kClassical, {8, 8});
    for (const auto& term : large.first.terms()) {
        CHECK(term.dx + term.dy <= 4);
        CHECK(small.first.coefficient(term.dx, term.dy) == term.value);
    }
}

TEST_CASE("coefficients equal the direct sums") {
    for (std::uint32_t m = 0; m <= 20; ++m) {
        const SumTable table = generating_series_sums(m, kClassical, 3, 3);
        CHECK(table.parity_ok);
        for (std::uint32_t p = 0; p <= 3; ++p) {
            for (std::uint32_t qq = 0; qq <= 3; ++qq) {
                REQUIRE(table.s[p][qq] == s_direct(p, qq, m, kClassical));
                REQUIRE(table.t[p][qq] == t_direct(p, qq, m, kClassical));
                REQUIRE(table.s_star[p][qq] == s_star_direct(p, qq, m, kClassical));
                REQUIRE(table.t_star[p][qq] == t_star_direct(p, qq, m, kClassical));
            }
        }
    }
}

TEST_CASE("extraction examples and bounds") {
    const Bounds b{3, 2};
    for (std::uint32_t m = 0; m <= 6; ++m) {
        CHECK(sgn(recursion_FG(m, kClassical, b).first.coefficient(1, 0)) == 0);
    }
    const auto strict2 = recursion_FG(2, kClassical, b);
    const auto star2 = recursion_FG_star(2, kClassical, b);
    const SumTable t2 = extract_sums(strict2.first, strict2.second, star2.first, star2.second, 1, 1);
    CHECK(t2.s[0][1] == q("5/4"));
    CHECK(t2.s[0][1] == s_direct(0, 1, 2, kClassical));

    const auto strict3 = recursion_FG(3, kClassical, b);
    const auto star3 = recursion_FG_star(3, kClassical, b);
    const SumTable t3 = extract_sums(strict3.first, strict3.second, star3.first, star3.second, 1, 2);
    CHECK(t3.t[1][0] == t_direct(1, 0, 3, kClassical));

    CHECK_THROWS_AS(extract_sums(strict3.first, strict3.second, star3.first, star3.second, 2, 0), std::out_of_range);
    CHECK_THROWS_AS(extract_sums(strict3.first, strict3.second, star3.first, star3.second, 1, 3), std::out_of_range);
}

TEST_CASE("star series at m=3 against direct sums") {
    const Bounds b{4, 3};
    const auto star = recursion_FG_star(3, kClassical, b);
    for (std::uint32_t p = 0; 2 * p <= b.x; ++p) {
        for (std::uint32_t qq = 0; qq <= b.y; ++qq) {
            CHECK(star.first.coefficient(2 * p, qq) == s_star_direct(p, qq, 3, kClassical));
            if (2 * p + 1 <= b.x) {
                CHECK(star.second.coefficient(2 * p + 1, qq) == t_star_direct(p, qq, 3, kClassical));
            }
        }
    }
}

TEST_CASE("closed V_l equals the series inverse of the star step matrix") {
    for (const AbcParams& params : {kClassical, AbcParams(4, 2, 3), AbcParams(2, 2, 2), AbcParams(5, 3, 4)}) {
        for (std::uint32_t l = 1; l <= 4; ++l) {
            const Bounds b{4, 3};
            CHECK(inverse_series(star_step_matrix(l, params, b)) == transfer_matrix_V(l, params, b));
            const Mat2 product = star_step_matrix(l, params, b) * transfer_matrix_V(l, params, b);
            CHECK(product == Mat2::identity(b));
        }
        const auto closed = recursion_FG_star(6, params, {4, 3});
        const auto inverted = recursion_FG_star_by_inversion(6, params, {4, 3});
        CHECK(closed.first == inverted.first);
        CHECK(closed.second == inverted.second);
    }
    Mat2 doubled = Mat2::identity({2, 2});
    doubled.e00 = BivarPoly::constant(BigRational(2), {2, 2});
    CHECK_THROWS_AS(inverse_series(doubled), std::invalid_argument);
}

TEST_CASE("generating-series identity") {
    CHECK(check_gen_identity(0, kClassical, {3, 3}).equal);
    CHECK(check_gen_identity(1, kClassical, {3, 3}).equal);
    CHECK(check_gen_identity(4, AbcParams(4, 2, 3), {4, 4}).equal);
    const auto report = check_gen_identity(7, kClassical, {5, 5});
    CHECK(report.equal);
    CHECK(report.compared_terms > 0);
    CHECK(report.mismatches.empty());
}

TEST_CASE("symmetric form") {
    CHECK(check_symmetric_form(0, kClassical, {2, 2}).equal);
    CHECK(check_symmetric_form(1, kClassical, {3, 3}).equal);
    CHECK(check_symmetric_form(5, kClassical, {4, 4}).equal);
    CHECK(check_symmetric_form(6, AbcParams(2, 2, 2), {4, 4}).equal);
}

TEST_CASE("symmetric form by hand at m=1") {
    // F*_1 (1+x-y)(1-x-y) = 1 - y = F_1(x,-y) for every admissible triple.
    const Bounds b{3, 3};
    const auto star = recursion_FG_star(1, kClassical, b);
    BivarPoly left = BivarPoly::constant(BigRational(1), b);
    left.set(1, 0, BigRational(1));
    left.set(0, 1, BigRational(-1));
    BivarPoly right = BivarPoly::constant(BigRational(1), b);
    right.set(1, 0, BigRational(-1));
    right.set(0, 1, BigRational(-1));
    BivarPoly expected = BivarPoly::constant(BigRational(1), b);
    expected.set(0, 1, BigRational(-1));
    CHECK(star.first * left * right == expected);
}

TEST_CASE("a perturbed series is caught") {
    const Bounds b{3, 3};
    BivarPoly f = recursion_FG_star(3, kClassical, b).first;
    BivarPoly g = f;
    g.set(2, 1, g.coefficient(2, 1) + 1);
    const auto mismatches = compare_series(f, g);
    REQUIRE(mismatches.size() == 1);
    CHECK(mismatches[0].dx == 2);
    CHECK(mismatches[0].dy == 1);
}
