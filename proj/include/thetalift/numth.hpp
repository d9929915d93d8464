#pragma once

#include "thetalift/rational.hpp"

#include <map>
#include <vector>

namespace thetalift::numth {

// sigma_k(n) = sum_{d | n} d^k.
Rat sigma_k(const Int& n, unsigned k);

// lambda_k(n) = (1/2) sum_{d | n} min(d, n/d)^k.
Rat lambda_k(const Int& n, unsigned k);

// Bernoulli numbers, B_1 = -1/2 convention.
Rat bernoulli(unsigned n);

// Bernoulli polynomial B_n(x).
Rat bernoulli_poly(unsigned n, const Rat& x);

// Kronecker symbol (a/n), full extension to all integers.
int kronecker(const Int& a, const Int& n);

// Moebius function, n >= 1.
int moebius(const Int& n);

std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

std::vector<Int> divisors(const Int& n);

bool is_fundamental_discriminant(const Int& D);

// Writes D = D0 * f^2 with D0 the fundamental discriminant of the same
// square class. Requires D != 0 and D = 0,1 mod 4.
void fundamental_part(const Int& D, Int& D0, Int& f);

// Kronecker character (D/.) attached to a fundamental discriminant D.
struct DirichletChar {
    Int D;        // fundamental discriminant (may be 1 for the trivial character)
    Int modulus;  // |D|

    explicit DirichletChar(const Int& fund_disc);
    int operator()(const Int& n) const { return kronecker(D, n); }
};

// Generalized Bernoulli number B_{n,chi}.
Rat generalized_bernoulli(const DirichletChar& chi, unsigned n);

// zeta(1-n) = -B_n / n, n >= 1.
Rat zeta_nonpos(unsigned n);

// L(1-n, chi) = -B_{n,chi} / n, n >= 1.
Rat lvalue_nonpos(const DirichletChar& chi, unsigned n);

}  // namespace thetalift::numth
