#include "virmtc/rational.hpp"

#include "virmtc/errors.hpp"

namespace virmtc {

std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw ValidationError("not a rational number: '" + s + "'");
    r.canonicalize();
    return r;
}

Rational frac_part(const Rational& r) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return r - Rational(fl);
}

}  // namespace virmtc
