#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace thetalift {

// Exact rational scalar. mpq_class keeps results in lowest terms with
// positive denominator, which is exactly the invariant we need.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// Parses "p", "p/q", or "-p/q".
Rat rat_from_string(const std::string& s);

// "p/q" when q != 1, else "p".
std::string rat_to_string(const Rat& r);

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

// r mod 1, normalized into [0, 1).
Rat rat_mod1(const Rat& r);

Rat rat_pow(const Rat& base, long e);

inline double rat_to_double(const Rat& r) { return r.get_d(); }

// Exact integer square root test; returns true and sets root if n is a square.
bool is_square(const Int& n, Int& root);

Int gcd(const Int& a, const Int& b);

}  // namespace thetalift
