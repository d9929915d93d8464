#include "thetalift/qexp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace thetalift::qexp {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

const Rat& Scalar::rat() const {
    if (!is_exact()) throw std::logic_error("Scalar: complex value has no exact part");
    return std::get<Rat>(v_);
}

Complex Scalar::to_complex() const {
    if (is_exact()) return Complex(std::get<Rat>(v_).get_d(), 0.0);
    return std::get<Complex>(v_);
}

bool Scalar::is_zero() const {
    if (is_exact()) return std::get<Rat>(v_) == 0;
    return std::get<Complex>(v_) == Complex(0.0, 0.0);
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_exact() && o.is_exact()) return Scalar(rat() + o.rat());
    return Scalar(to_complex() + o.to_complex());
}

Scalar Scalar::operator-() const {
    if (is_exact()) return Scalar(Rat(-rat()));
    return Scalar(-to_complex());
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_exact() && o.is_exact()) return Scalar(rat() * o.rat());
    return Scalar(to_complex() * o.to_complex());
}

bool Scalar::operator==(const Scalar& o) const {
    if (is_exact() != o.is_exact()) return false;
    if (is_exact()) return rat() == o.rat();
    return to_complex() == o.to_complex();
}

QSeries::QSeries(Rat weight, std::vector<long> group_orders, long exp_den, Rat prec)
    : weight_(std::move(weight)),
      group_orders_(std::move(group_orders)),
      exp_den_(exp_den),
      prec_(std::move(prec)) {
    if (exp_den_ <= 0) throw std::domain_error("QSeries: exponent denominator must be positive");
    ncosets_ = 1;
    for (long d : group_orders_) {
        if (d <= 0) throw std::domain_error("QSeries: invalid group order");
        ncosets_ *= d;
    }
}

long long QSeries::exp_num(const Rat& exponent) const {
    Rat scaled = exponent * Rat(Int(exp_den_));
    if (!rat_is_integer(scaled))
        throw std::domain_error("QSeries: exponent denominator does not divide " +
                                rat_to_string(exponent));
    if (!scaled.get_num().fits_slong_p())
        throw std::domain_error("QSeries: exponent out of range");
    return scaled.get_num().get_si();
}

Rat QSeries::principal_min() const {
    if (coeffs_.empty()) return Rat(0);
    long long m = coeffs_.begin()->second.is_zero() ? 0 : coeffs_.begin()->first.second;
    bool found = false;
    for (const auto& [key, val] : coeffs_) {
        if (val.is_zero()) continue;
        if (!found || key.second < m) m = key.second;
        found = true;
    }
    if (!found) return Rat(0);
    return exponent_of(m);
}

void QSeries::set(int coset, const Rat& exponent, Scalar value) {
    if (coset < 0 || coset >= ncosets_) throw std::domain_error("QSeries: coset out of range");
    if (exponent >= prec_) return;
    long long num = exp_num(exponent);
    if (value.is_zero())
        coeffs_.erase({coset, num});
    else
        coeffs_[{coset, num}] = std::move(value);
}

void QSeries::add_to(int coset, const Rat& exponent, const Scalar& value) {
    if (coset < 0 || coset >= ncosets_) throw std::domain_error("QSeries: coset out of range");
    if (exponent >= prec_) return;
    long long num = exp_num(exponent);
    auto it = coeffs_.find({coset, num});
    if (it == coeffs_.end()) {
        if (!value.is_zero()) coeffs_[{coset, num}] = value;
    } else {
        it->second += value;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

Scalar QSeries::get(int coset, const Rat& exponent) const {
    long long num = exp_num(exponent);
    auto it = coeffs_.find({coset, num});
    return it == coeffs_.end() ? Scalar() : it->second;
}

bool QSeries::is_zero() const {
    for (const auto& [key, val] : coeffs_)
        if (!val.is_zero()) return false;
    return true;
}

int QSeries::coset_add(int i, int j) const {
    if (group_orders_.empty()) {
        if (i != 0 || j != 0) throw std::domain_error("QSeries: scalar series has one coset");
        return 0;
    }
    int out = 0;
    long ii = i, jj = j;
    // mixed-radix, most significant digit first
    std::vector<long> di(group_orders_.size()), dj(group_orders_.size());
    for (size_t t = group_orders_.size(); t-- > 0;) {
        di[t] = ii % group_orders_[t];
        ii /= group_orders_[t];
        dj[t] = jj % group_orders_[t];
        jj /= group_orders_[t];
    }
    for (size_t t = 0; t < group_orders_.size(); ++t)
        out = static_cast<int>(out * group_orders_[t] + (di[t] + dj[t]) % group_orders_[t]);
    return out;
}

int QSeries::coset_neg(int i) const {
    if (group_orders_.empty()) return 0;
    long ii = i;
    std::vector<long> d(group_orders_.size());
    for (size_t t = group_orders_.size(); t-- > 0;) {
        d[t] = ii % group_orders_[t];
        ii /= group_orders_[t];
    }
    int out = 0;
    for (size_t t = 0; t < group_orders_.size(); ++t)
        out = static_cast<int>(out * group_orders_[t] + (group_orders_[t] - d[t]) % group_orders_[t]);
    return out;
}

QSeries QSeries::truncated(const Rat& new_prec) const {
    QSeries out(weight_, group_orders_, exp_den_, std::min(new_prec, prec_));
    for (const auto& [key, val] : coeffs_) {
        Rat e = exponent_of(key.second);
        if (e < out.prec_) out.coeffs_[key] = val;
    }
    return out;
}

QSeries QSeries::with_weight(Rat w) const {
    QSeries out = *this;
    out.weight_ = std::move(w);
    return out;
}

std::vector<Complex> QSeries::eval(Complex tau) const {
    std::vector<Complex> out(ncosets_, Complex(0, 0));
    for (const auto& [key, val] : coeffs_) {
        double e = exponent_of(key.second).get_d();
        Complex phase = std::exp(Complex(0, kTwoPi) * e * tau);
        out[key.first] += val.to_complex() * phase;
    }
    return out;
}

nlohmann::json QSeries::to_json() const {
    nlohmann::json j;
    j["weight"] = rat_to_string(weight_);
    nlohmann::json cosets = nlohmann::json::array();
    for (long i = 0; i < ncosets_; ++i) cosets.push_back(i);
    j["cosets"] = cosets;
    j["group_orders"] = group_orders_;
    j["exp_den"] = exp_den_;
    j["prec"] = rat_to_string(prec_);
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [key, val] : coeffs_) {
        nlohmann::json c;
        c["coset"] = key.first;
        c["exp"] = rat_to_string(exponent_of(key.second));
        if (val.is_exact()) {
            c["rat"] = rat_to_string(val.rat());
        } else {
            c["re"] = val.to_complex().real();
            c["im"] = val.to_complex().imag();
        }
        coeffs.push_back(c);
    }
    j["coeffs"] = coeffs;
    return j;
}

QSeries QSeries::from_json(const nlohmann::json& j) {
    std::vector<long> orders;
    if (j.contains("group_orders")) orders = j["group_orders"].get<std::vector<long>>();
    QSeries out(rat_from_string(j["weight"].get<std::string>()), orders,
                j["exp_den"].get<long>(), rat_from_string(j["prec"].get<std::string>()));
    for (const auto& c : j["coeffs"]) {
        int coset = c["coset"].get<int>();
        Rat e = rat_from_string(c["exp"].get<std::string>());
        if (c.contains("rat"))
            out.set(coset, e, Scalar(rat_from_string(c["rat"].get<std::string>())));
        else
            out.set(coset, e, Scalar(Complex(c["re"].get<double>(), c["im"].get<double>())));
    }
    return out;
}

namespace {

void require_same_cosets(const QSeries& a, const QSeries& b) {
    if (a.group_orders() != b.group_orders())
        throw std::domain_error("qexp: incompatible coset structure");
}

long lcm_den(long a, long b) { return std::lcm(a, b); }

}  // namespace

QSeries add(const QSeries& a, const QSeries& b) {
    require_same_cosets(a, b);
    if (a.weight() != b.weight()) throw std::domain_error("qexp::add: weight mismatch");
    long den = lcm_den(a.exp_den(), b.exp_den());
    QSeries out(a.weight(), a.group_orders(), den, std::min(a.prec(), b.prec()));
    for (const auto& [key, val] : a.coeffs()) out.add_to(key.first, a.exponent_of(key.second), val);
    for (const auto& [key, val] : b.coeffs()) out.add_to(key.first, b.exponent_of(key.second), val);
    return out;
}

QSeries scale(const QSeries& a, const Scalar& c) {
    QSeries out(a.weight(), a.group_orders(), a.exp_den(), a.prec());
    for (const auto& [key, val] : a.coeffs())
        out.add_to(key.first, a.exponent_of(key.second), val * c);
    return out;
}

QSeries mul(const QSeries& a, const QSeries& b) {
    require_same_cosets(a, b);
    if (a.ncosets() > 1 && a.group_orders().empty())
        throw std::domain_error("qexp::mul: multi-coset series without group structure");
    // prec_out = min(prec_a + principal_min_b, prec_b + principal_min_a)
    Rat prec_out = std::min(a.prec() + b.principal_min(), b.prec() + a.principal_min());
    Rat pm_out = a.principal_min() + b.principal_min();
    if (prec_out <= pm_out) throw std::domain_error("qexp::mul: precision underflow");
    long den = lcm_den(a.exp_den(), b.exp_den());
    QSeries out(a.weight() + b.weight(), a.group_orders(), den, prec_out);
    for (const auto& [ka, va] : a.coeffs()) {
        Rat ea = a.exponent_of(ka.second);
        for (const auto& [kb, vb] : b.coeffs()) {
            Rat e = ea + b.exponent_of(kb.second);
            if (e >= prec_out) continue;
            out.add_to(out.coset_add(ka.first, kb.first), e, va * vb);
        }
    }
    return out;
}

QSeries derivative(const QSeries& a) {
    QSeries out(a.weight() + 2, a.group_orders(), a.exp_den(), a.prec());
    for (const auto& [key, val] : a.coeffs()) {
        Rat e = a.exponent_of(key.second);
        out.add_to(key.first, e, val * Scalar(e));
    }
    return out;
}

QSeries tensor_product(const QSeries& f, const QSeries& g) {
    std::vector<long> orders = f.group_orders();
    orders.insert(orders.end(), g.group_orders().begin(), g.group_orders().end());
    Rat prec_out = std::min(f.prec() + g.principal_min(), g.prec() + f.principal_min());
    Rat pm_out = f.principal_min() + g.principal_min();
    if (prec_out <= pm_out) throw std::domain_error("qexp::tensor_product: precision underflow");
    long den = lcm_den(f.exp_den(), g.exp_den());
    QSeries out(f.weight() + g.weight(), orders, den, prec_out);
    long gsize = g.ncosets();
    for (const auto& [kf, vf] : f.coeffs()) {
        Rat ef = f.exponent_of(kf.second);
        for (const auto& [kg, vg] : g.coeffs()) {
            Rat e = ef + g.exponent_of(kg.second);
            if (e >= prec_out) continue;
            out.add_to(static_cast<int>(kf.first * gsize + kg.first), e, vf * vg);
        }
    }
    return out;
}

QSeries rc_bracket(const QSeries& f, const QSeries& g, unsigned n) {
    const Rat kappa = f.weight();
    const Rat ell = g.weight();
    // Gamma(kappa+n) etc. must avoid nonpositive-integer poles.
    for (const Rat* w : {&kappa, &ell}) {
        Rat arg = *w + Rat(Int(n));
        if (rat_is_integer(arg) && arg <= 0)
            throw std::domain_error("rc_bracket: Gamma pole at weight + n");
    }
    std::optional<QSeries> acc;
    for (unsigned r = 0; r <= n; ++r) {
        unsigned s = n - r;
        // (-1)^r Gamma(kappa+n) Gamma(ell+n) /
        //   (Gamma(s+1) Gamma(kappa+n-s) Gamma(r+1) Gamma(ell+n-r))
        Rat co(r % 2 == 0 ? 1 : -1);
        for (unsigned i = 1; i <= s; ++i) co *= kappa + Rat(Int(n)) - Rat(Int(i));
        for (unsigned i = 1; i <= r; ++i) co *= ell + Rat(Int(n)) - Rat(Int(i));
        Int rfact, sfact;
        mpz_fac_ui(rfact.get_mpz_t(), r);
        mpz_fac_ui(sfact.get_mpz_t(), s);
        co /= Rat(rfact * sfact);
        QSeries fr = f;
        for (unsigned i = 0; i < r; ++i) fr = derivative(fr);
        QSeries gs = g;
        for (unsigned i = 0; i < s; ++i) gs = derivative(gs);
        QSeries term = scale(tensor_product(fr, gs), Scalar(co));
        if (!acc) {
            acc = term;
        } else {
            if (acc->prec() != term.prec())
                throw std::domain_error("rc_bracket: incompatible truncations");
            acc = add(acc->with_weight(term.weight()), term);
        }
    }
    return acc->with_weight(kappa + ell + Rat(Int(2 * n)));
}

}  // namespace thetalift::qexp
