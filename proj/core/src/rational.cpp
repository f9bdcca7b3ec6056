#include "mzv/rational.hpp"

#include <stdexcept>

namespace mzv {

std::string to_fraction_string(const BigRational& value) {
    // mpq_class values produced by arithmetic are canonical; copies from user input may not be.
    BigRational canonical(value);
    canonical.canonicalize();
    return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

BigRational parse_fraction(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("empty rational");
    }
    BigRational result;
    if (result.set_str(text, 10) != 0) {
        throw std::invalid_argument("malformed rational: " + text);
    }
    if (result.get_den() == 0) {
        throw std::invalid_argument("zero denominator: " + text);
    }
    result.canonicalize();
    return result;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

BigInt factorial(std::uint64_t n) {
    BigInt result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

BigRational inverse_power(std::uint64_t n, std::uint64_t k) {
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), n, k);
    return BigRational(BigInt(1), den);
}

double to_double(const BigRational& value) { return value.get_d(); }

}  // namespace mzv
