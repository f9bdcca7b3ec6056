#include "mzv/identity.hpp"

namespace mzv {

BigInt identity_coefficient(const IdentityTerm& term) {
    BigInt coefficient = binomial(term.k + term.l, term.k) * binomial(term.u + term.v, term.u);
    if (sign_power(term.j + term.k) < 0) {
        coefficient = -coefficient;
    }
    return coefficient;
}

}  // namespace mzv
