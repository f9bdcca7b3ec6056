#pragma once

// The harmonic algebra: rational combinations of noncommutative words z_{k1}...z_{kn}, the
// quasi-shuffle product, the star map S, and the truncated evaluation maps Z_m and Z*_m = Z_m o S.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mzv/identity.hpp"
#include "mzv/index.hpp"
#include "mzv/rational.hpp"

namespace mzv {

/// Letters are the subscripts k of z_k (all >= 1); the empty word is the unit.
using Word = std::vector<std::uint32_t>;

std::string word_to_string(const Word& word);

/// Finite rational combination of words. Zero coefficients are never stored, so structural
/// equality is algebraic equality.
class HPoly {
public:
    using Terms = std::map<Word, BigRational>;

    HPoly() = default;
    static HPoly unit();
    /// Throws std::invalid_argument if a letter is 0.
    static HPoly word(const Word& letters, const BigRational& coefficient = BigRational(1));
    static HPoly from_index(const Index& index);
    /// z_letter repeated `count` times.
    static HPoly power(std::uint32_t letter, std::uint32_t count);

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] BigRational coefficient(const Word& w) const;

    void add_term(const Word& w, const BigRational& coefficient);

    HPoly& operator+=(const HPoly& other);
    HPoly& operator-=(const HPoly& other);
    HPoly& operator*=(const BigRational& scalar);
    friend HPoly operator+(HPoly u, const HPoly& v) { return u += v; }
    friend HPoly operator-(HPoly u, const HPoly& v) { return u -= v; }
    friend HPoly operator*(HPoly u, const BigRational& scalar) { return u *= scalar; }
    friend bool operator==(const HPoly&, const HPoly&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    Terms terms_;
};

/// Bilinear word concatenation.
HPoly concat(const HPoly& u, const HPoly& v);

/// Quasi-shuffle product: w*1 = 1*w = w,
/// z_k w * z_l w' = z_k (w * z_l w') + z_l (z_k w * w') + z_{k+l} (w * w').
/// Memoizes word pairs for the duration of one object's lifetime.
class HarmonicMultiplier {
public:
    HPoly multiply(const HPoly& u, const HPoly& v);
    const HPoly& multiply_words(const Word& u, const Word& v);

private:
    std::map<std::pair<Word, Word>, HPoly> memo_;
};

HPoly harmonic_mul(const HPoly& u, const HPoly& v);

/// S(1) = 1, S(z_k) = z_k, S(z_k z_l w) = z_k S(z_l w) + z_{k+l} S(w), extended linearly.
HPoly S_map(const HPoly& u);

/// Linear map sending z_{k1}...z_{kn} to zeta_m(k1, ..., kn) and 1 to 1.
BigRational Z_m_eval(const HPoly& u, std::uint32_t m);
/// Z_m o S.
BigRational Z_star_m_eval(const HPoly& u, std::uint32_t m);

/// Smallest m in [1, max_m] with Z_m(u) != 0.
std::optional<std::uint32_t> first_nonvanishing_level(const HPoly& u, std::uint32_t max_m);

/// Multiplicity-weighted sum of the words of I_{p,q}.
HPoly build_frs(std::uint32_t p, std::uint32_t q, const AbcParams& params);
/// Multiplicity-weighted sum of the words of J_{p,q}.
HPoly build_frt(std::uint32_t p, std::uint32_t q, const AbcParams& params);

struct WordMismatch {
    Word word;
    BigRational lhs;
    BigRational rhs;
};

struct HarmonicIdentityReport {
    AbcParams params;
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
    std::vector<WordMismatch> mismatches;
    bool equal = false;
};

/// S(frs_{p,q}) against sum (-1)^(j+k) C(k+l,k) C(u+v,u) frs_{i,j} * S(z_c^(k+l)) * S(z_c^(u+v)).
HarmonicIdentityReport verify_frs_symbolic(std::uint32_t p, std::uint32_t q, const AbcParams& params,
                                           CoefficientFn coefficient = identity_coefficient);
/// Same with frt.
HarmonicIdentityReport verify_frt_symbolic(std::uint32_t p, std::uint32_t q, const AbcParams& params,
                                           CoefficientFn coefficient = identity_coefficient);

}  // namespace mzv
