#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace curvelab {

// Exact arithmetic carriers.  Rat is always stored reduced with positive
// denominator (mpq canonical form); zero is 0/1.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, unsigned long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline const Int num(const Rat& r) { return r.get_num(); }
inline const Int den(const Rat& r) { return r.get_den(); }

inline std::string str(const Rat& r) { return r.get_str(); }
inline std::string str(const Int& z) { return z.get_str(); }

// Parses "n" or "n/d"; throws std::invalid_argument on malformed input or
// zero denominator.
Rat rat_from_string(const std::string& s);

}  // namespace curvelab
