#include "thetalift/rational.hpp"

namespace thetalift {

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        return make_rat(Int(s), Int(1));
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return make_rat(num, den);
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Rat rat_mod1(const Rat& r) {
    Rat out = r - Rat(rat_floor(r));
    if (out < 0 || out >= 1) throw std::logic_error("rat_mod1: normalization failed");
    return out;
}

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: negative power of zero");
        return 1 / rat_pow(base, -e);
    }
    Rat acc(1), b = base;
    long n = e;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

bool is_square(const Int& n, Int& root) {
    if (n < 0) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root * root == n;
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace thetalift
