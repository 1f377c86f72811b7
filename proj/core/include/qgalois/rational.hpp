#pragma once

#include <gmpxx.h>
#include <string>

namespace qg {

// Exact rational scalar. GMP does all the heavy lifting; values are always
// stored in canonical (reduced, positive denominator) form.
using Rat = mpq_class;

// mpq_class(n, d) does not canonicalize; always build fractions through this.
inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = base;
    bool neg = e < 0;
    unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    if (neg) return Rat(1) / acc;
    return acc;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace qg
