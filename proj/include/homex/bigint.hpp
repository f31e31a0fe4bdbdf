#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace homex {

// All homomorphism counts are exact, unbounded integers.  The only
// floating-point surface in the library is spectral_margin, which is
// diagnostic and never feeds an equality check.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt & base, unsigned exponent)
{
    BigInt result = 1;
    BigInt b = base;
    unsigned e = exponent;
    while (e != 0) {
        if (e & 1u)
            result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

}
