#include "thetalift/numth.hpp"

#include <mutex>
#include <stdexcept>

namespace thetalift::numth {

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
    if (n <= 0) throw std::domain_error("factorize: n must be positive");
    std::vector<std::pair<Int, unsigned>> out;
    Int m = n;
    for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            unsigned e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

std::vector<Int> divisors(const Int& n) {
    auto fac = factorize(n);
    std::vector<Int> out{1};
    for (const auto& [p, e] : fac) {
        size_t base = out.size();
        Int pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    return out;
}

Rat sigma_k(const Int& n, unsigned k) {
    if (n <= 0) throw std::domain_error("sigma_k: n must be positive");
    Int tot = 0;
    for (const auto& d : divisors(n)) {
        Int dk;
        mpz_pow_ui(dk.get_mpz_t(), d.get_mpz_t(), k);
        tot += dk;
    }
    return Rat(tot);
}

Rat lambda_k(const Int& n, unsigned k) {
    if (n <= 0) throw std::domain_error("lambda_k: n must be positive");
    Int tot = 0;
    for (const auto& d : divisors(n)) {
        Int m = d <= n / d ? d : n / d;
        Int mk;
        mpz_pow_ui(mk.get_mpz_t(), m.get_mpz_t(), k);
        tot += mk;
    }
    return make_rat(tot, Int(2));
}

Rat bernoulli(unsigned n) {
    static std::mutex mtx;
    static std::vector<Rat> cache{Rat(1)};
    std::lock_guard<std::mutex> lock(mtx);
    // B_m via the recurrence sum_{j=0}^{m} binom(m+1, j) B_j = 0.
    while (cache.size() <= n) {
        unsigned m = static_cast<unsigned>(cache.size());
        Rat acc(0);
        for (unsigned j = 0; j < m; ++j) {
            Int b;
            mpz_bin_uiui(b.get_mpz_t(), m + 1, j);
            acc += Rat(b) * cache[j];
        }
        cache.push_back(-acc / Rat(Int(m + 1)));
    }
    return cache[n];
}

Rat bernoulli_poly(unsigned n, const Rat& x) {
    Rat acc(0);
    for (unsigned k = 0; k <= n; ++k) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), n, k);
        acc += Rat(b) * bernoulli(k) * rat_pow(x, n - k);
    }
    return acc;
}

int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

int moebius(const Int& n) {
    if (n <= 0) throw std::domain_error("moebius: n must be positive");
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        (void)p;
        if (e >= 2) return 0;
        sign = -sign;
    }
    return sign;
}

bool is_fundamental_discriminant(const Int& D) {
    if (D == 1) return true;
    if (D == 0) return false;
    Int m1 = D % 4;
    if (m1 < 0) m1 += 4;
    auto squarefree = [](const Int& v) {
        for (const auto& [p, e] : factorize(abs(v)))
            if (e >= 2) return false;
        return true;
    };
    if (m1 == 1) return squarefree(D);
    if (m1 == 0) {
        Int m = D / 4;
        Int r = m % 4;
        if (r < 0) r += 4;
        return (r == 2 || r == 3) && squarefree(m);
    }
    return false;
}

void fundamental_part(const Int& D, Int& D0, Int& f) {
    if (D == 0) throw std::domain_error("fundamental_part: D = 0");
    Int r = D % 4;
    if (r < 0) r += 4;
    if (r == 2 || r == 3) throw std::domain_error("fundamental_part: D not a discriminant");
    // squarefree core s of D (with sign)
    Int s = D < 0 ? Int(-1) : Int(1);
    Int g = 1;
    for (const auto& [p, e] : factorize(abs(D))) {
        if (e & 1) s *= p;
        Int pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e / 2);
        g *= pk;
    }
    Int sm = s % 4;
    if (sm < 0) sm += 4;
    if (sm == 1) {
        D0 = s;
        f = g;
    } else {
        D0 = 4 * s;
        if (g % 2 != 0) throw std::logic_error("fundamental_part: inconsistent square part");
        f = g / 2;
    }
    if (D0 * f * f != D) throw std::logic_error("fundamental_part: decomposition failed");
}

DirichletChar::DirichletChar(const Int& fund_disc) : D(fund_disc), modulus(abs(fund_disc)) {
    if (!is_fundamental_discriminant(D))
        throw std::domain_error("DirichletChar: not a fundamental discriminant");
}

Rat generalized_bernoulli(const DirichletChar& chi, unsigned n) {
    // B_{n,chi} = m^{n-1} sum_{a=1}^{m} chi(a) B_n(a/m)
    Int m = chi.modulus;
    Rat acc(0);
    for (Int a = 1; a <= m; ++a) {
        int c = chi(a);
        if (c == 0) continue;
        acc += Rat(c) * bernoulli_poly(n, make_rat(a, m));
    }
    Rat mp = n == 0 ? 1 / Rat(m) : rat_pow(Rat(m), static_cast<long>(n) - 1);
    return mp * acc;
}

Rat zeta_nonpos(unsigned n) {
    if (n == 0) throw std::domain_error("zeta_nonpos: needs n >= 1");
    return -bernoulli(n) / Rat(Int(n));
}

Rat lvalue_nonpos(const DirichletChar& chi, unsigned n) {
    if (n == 0) throw std::domain_error("lvalue_nonpos: needs n >= 1");
    return -generalized_bernoulli(chi, n) / Rat(Int(n));
}

}  // namespace thetalift::numth
