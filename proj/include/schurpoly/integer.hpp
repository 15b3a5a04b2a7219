#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace schurpoly {

// Arbitrary-precision integer carrier for the whole library.
using Int = mpz_class;

// Thrown when a construction fails its own verification step, i.e. an
// implementation defect rather than bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Int pow_int(unsigned long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

// Least non-negative residue of a mod m (m > 0), independent of sign of a.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline std::string to_decimal(const Int& v) { return v.get_str(10); }

}  // namespace schurpoly
