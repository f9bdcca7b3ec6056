#include "mzv/harmonic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mzv/zeta.hpp"

namespace mzv {

namespace {

Word prepend(std::uint32_t letter, const Word& tail) {
    Word out;
    out.reserve(tail.size() + 1);
    out.push_back(letter);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

Word drop_first(const Word& w) { return Word(w.begin() + 1, w.end()); }

// Accumulates z_letter * poly into out.
void add_prefixed(HPoly& out, std::uint32_t letter, const HPoly& poly) {
    for (const auto& [w, c] : poly.terms()) {
        out.add_term(prepend(letter, w), c);
    }
}

HPoly family_words(const IndexMultiset& family) {
    HPoly out;
    for (const auto& [index, count] : family) {
        Word w(index.entries().begin(), index.entries().end());
        out.add_term(w, BigRational(BigInt(static_cast<unsigned long>(count))));
    }
    return out;
}

class StarMap {
public:
    const HPoly& of_word(const Word& w) {
        if (auto it = memo_.find(w); it != memo_.end()) {
            return it->second;
        }
        HPoly result;
        if (w.size() <= 1) {
            result = HPoly::word(w);
        } else {
            // S(z_k z_l v) = z_k S(z_l v) + S(z_{k+l} v); the merged letter may merge again.
            add_prefixed(result, w[0], of_word(drop_first(w)));
            Word merged = drop_first(w);
            merged[0] += w[0];
            for (const auto& [image, c] : of_word(merged).terms()) {
                result.add_term(image, c);
            }
        }
        return memo_.emplace(w, std::move(result)).first->second;
    }

private:
    std::map<Word, HPoly> memo_;
};

HarmonicIdentityReport verify_symbolic(bool j_family, std::uint32_t p, std::uint32_t q, const AbcParams& params,
                                       CoefficientFn coefficient) {
    auto build = [&](std::uint32_t i, std::uint32_t j) {
        return j_family ? build_frt(i, j, params) : build_frs(i, j, params);
    };

    const HPoly lhs = S_map(build(p, q));

    const std::uint32_t max_r = 2 * p + q;
    std::vector<HPoly> star_powers;
    for (std::uint32_t r = 0; r <= max_r; ++r) {
        star_powers.push_back(S_map(HPoly::power(params.c(), r)));
    }

    HarmonicMultiplier multiplier;
    std::map<std::pair<std::uint32_t, std::uint32_t>, HPoly> star_products;
    std::map<std::pair<std::uint32_t, std::uint32_t>, HPoly> base;
    HPoly rhs;
    for_each_identity_term(p, q, [&](const IdentityTerm& t) {
        const std::uint32_t r1 = t.k + t.l;
        const std::uint32_t r2 = t.u + t.v;
        const std::pair<std::uint32_t, std::uint32_t> key{std::min(r1, r2), std::max(r1, r2)};
        auto product = star_products.find(key);
        if (product == star_products.end()) {
            product = star_products
                          .emplace(key, multiplier.multiply(star_powers[key.first], star_powers[key.second]))
                          .first;
        }
        auto family = base.find({t.i, t.j});
        if (family == base.end()) {
            family = base.emplace(std::pair{t.i, t.j}, build(t.i, t.j)).first;
        }
        rhs += multiplier.multiply(family->second, product->second) * BigRational(coefficient(t));
    });

    HarmonicIdentityReport report{params, p, q, lhs.size(), rhs.size(), {}, false};
    const HPoly difference = lhs - rhs;
    for (const auto& [w, c] : difference.terms()) {
        report.mismatches.push_back({w, lhs.coefficient(w), rhs.coefficient(w)});
    }
    report.equal = report.mismatches.empty();
    return report;
}

}  // namespace

std::string word_to_string(const Word& word) {
    if (word.empty()) {
        return "1";
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) {
        os << (i ? " " : "") << 'z' << word[i];
    }
    return os.str();
}

HPoly HPoly::unit() { return word({}); }

HPoly HPoly::word(const Word& letters, const BigRational& coefficient) {
    for (std::uint32_t k : letters) {
        if (k < 1) {
            throw std::invalid_argument("word letters must be >= 1");
        }
    }
    HPoly u;
    u.add_term(letters, coefficient);
    return u;
}

HPoly HPoly::from_index(const Index& index) { return word(Word(index.entries().begin(), index.entries().end())); }

HPoly HPoly::power(std::uint32_t letter, std::uint32_t count) { return word(Word(count, letter)); }

BigRational HPoly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? BigRational(0) : it->second;
}

void HPoly::add_term(const Word& w, const BigRational& coefficient) {
    if (sgn(coefficient) == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(w, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

HPoly& HPoly::operator+=(const HPoly& other) {
    for (const auto& [w, c] : other.terms_) {
        add_term(w, c);
    }
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& other) {
    for (const auto& [w, c] : other.terms_) {
        add_term(w, -c);
    }
    return *this;
}

HPoly& HPoly::operator*=(const BigRational& scalar) {
    if (sgn(scalar) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

std::string HPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << '(' << c.get_str() << ")*" << word_to_string(w);
    }
    return os.str();
}

HPoly concat(const HPoly& u, const HPoly& v) {
    HPoly out;
    for (const auto& [w1, c1] : u.terms()) {
        for (const auto& [w2, c2] : v.terms()) {
            Word joined(w1);
            joined.insert(joined.end(), w2.begin(), w2.end());
            out.add_term(joined, c1 * c2);
        }
    }
    return out;
}

const HPoly& HarmonicMultiplier::multiply_words(const Word& u, const Word& v) {
    // Commutative, so memoize on the ordered pair.
    auto key = u <= v ? std::pair{u, v} : std::pair{v, u};
    if (auto it = memo_.find(key); it != memo_.end()) {
        return it->second;
    }
    HPoly result;
    if (u.empty()) {
        result = HPoly::word(v);
    } else if (v.empty()) {
        result = HPoly::word(u);
    } else {
        const Word u_tail = drop_first(u);
        const Word v_tail = drop_first(v);
        add_prefixed(result, u[0], multiply_words(u_tail, v));
        add_prefixed(result, v[0], multiply_words(u, v_tail));
        add_prefixed(result, u[0] + v[0], multiply_words(u_tail, v_tail));
    }
    return memo_.emplace(std::move(key), std::move(result)).first->second;
}

HPoly HarmonicMultiplier::multiply(const HPoly& u, const HPoly& v) {
    HPoly out;
    for (const auto& [w1, c1] : u.terms()) {
        for (const auto& [w2, c2] : v.terms()) {
            const BigRational scale = c1 * c2;
            for (const auto& [w, c] : multiply_words(w1, w2).terms()) {
                out.add_term(w, c * scale);
            }
        }
    }
    return out;
}

HPoly harmonic_mul(const HPoly& u, const HPoly& v) {
    HarmonicMultiplier multiplier;
    return multiplier.multiply(u, v);
}

HPoly S_map(const HPoly& u) {
    StarMap star;
    HPoly out;
    for (const auto& [w, c] : u.terms()) {
        for (const auto& [image, coefficient] : star.of_word(w).terms()) {
            out.add_term(image, coefficient * c);
        }
    }
    return out;
}

BigRational Z_m_eval(const HPoly& u, std::uint32_t m) {
    std::vector<Index> indices;
    indices.reserve(u.size());
    for (const auto& [w, c] : u.terms()) {
        indices.emplace_back(w);
    }
    const auto values = zeta_values(ZetaKind::strict, indices, m);
    BigRational total = 0;
    std::size_t i = 0;
    for (const auto& [w, c] : u.terms()) {
        total += c * values[i++];
    }
    return total;
}

BigRational Z_star_m_eval(const HPoly& u, std::uint32_t m) { return Z_m_eval(S_map(u), m); }

std::optional<std::uint32_t> first_nonvanishing_level(const HPoly& u, std::uint32_t max_m) {
    for (std::uint32_t m = 1; m <= max_m; ++m) {
        if (sgn(Z_m_eval(u, m)) != 0) {
            return m;
        }
    }
    return std::nullopt;
}

HPoly build_frs(std::uint32_t p, std::uint32_t q, const AbcParams& params) {
    return family_words(index_family_I(p, q, params));
}

HPoly build_frt(std::uint32_t p, std::uint32_t q, const AbcParams& params) {
    return family_words(index_family_J(p, q, params));
}

HarmonicIdentityReport verify_frs_symbolic(std::uint32_t p, std::uint32_t q, const AbcParams& params,
                                           CoefficientFn coefficient) {
    return verify_symbolic(false, p, q, params, coefficient);
}

HarmonicIdentityReport verify_frt_symbolic(std::uint32_t p, std::uint32_t q, const AbcParams& params,
                                           CoefficientFn coefficient) {
    return verify_symbolic(true, p, q, params, coefficient);
}

}  // namespace mzv
