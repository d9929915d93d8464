#pragma once

#include "thetalift/rational.hpp"

#include <json.hpp>

#include <complex>
#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace thetalift::qexp {

using Complex = std::complex<double>;

// Coefficient scalar, tagged exact-rational or complex-float at construction.
// Mixing the two kinds promotes the result to float.
class Scalar {
  public:
    Scalar() : v_(Rat(0)) {}
    Scalar(const Rat& r) : v_(r) {}
    Scalar(long n) : v_(Rat(n)) {}
    Scalar(Complex c) : v_(c) {}
    Scalar(double d) : v_(Complex(d, 0.0)) {}

    bool is_exact() const { return std::holds_alternative<Rat>(v_); }
    const Rat& rat() const;
    Complex to_complex() const;
    bool is_zero() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator-(const Scalar& o) const { return *this + (-o); }
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const;

  private:
    std::variant<Rat, Complex> v_;
};

// Truncated Fourier expansion over the cosets of a finite abelian group
// (singleton group for scalar forms). Exponents are rationals with
// denominator dividing exp_den; coefficients are stored for exponents < prec.
//
// Immutable by convention after construction through the module operations.
class QSeries {
  public:
    // group_orders: cyclic orders of the coset group, empty list = scalar.
    QSeries(Rat weight, std::vector<long> group_orders, long exp_den, Rat prec);

    static QSeries scalar(Rat weight, long exp_den, Rat prec) {
        return QSeries(std::move(weight), {}, exp_den, std::move(prec));
    }

    const Rat& weight() const { return weight_; }
    const std::vector<long>& group_orders() const { return group_orders_; }
    long ncosets() const { return ncosets_; }
    long exp_den() const { return exp_den_; }
    const Rat& prec() const { return prec_; }

    // Most negative stored exponent (0 for an empty series).
    Rat principal_min() const;

    void set(int coset, const Rat& exponent, Scalar value);
    void add_to(int coset, const Rat& exponent, const Scalar& value);
    Scalar get(int coset, const Rat& exponent) const;

    const std::map<std::pair<int, long long>, Scalar>& coeffs() const { return coeffs_; }
    Rat exponent_of(long long num) const { return make_rat(Int(num), Int(exp_den_)); }

    bool is_zero() const;

    // Coset index arithmetic in the attached group.
    int coset_add(int i, int j) const;
    int coset_neg(int i) const;

    QSeries truncated(const Rat& new_prec) const;
    QSeries with_weight(Rat w) const;

    // Numeric evaluation sum_c coeff * e(exponent * tau) per coset.
    std::vector<Complex> eval(Complex tau) const;

    nlohmann::json to_json() const;
    static QSeries from_json(const nlohmann::json& j);

  private:
    Rat weight_;
    std::vector<long> group_orders_;
    long ncosets_;
    long exp_den_;
    Rat prec_;
    std::map<std::pair<int, long long>, Scalar> coeffs_;

    long long exp_num(const Rat& exponent) const;
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, const Scalar& c);
QSeries mul(const QSeries& a, const QSeries& b);

// (2 pi i)^{-1} d/dtau = q d/dq; multiplies the coefficient at exponent e by e.
QSeries derivative(const QSeries& a);

// Tensor product over the direct sum of the two coset groups; weights add.
QSeries tensor_product(const QSeries& f, const QSeries& g);

// n-th Rankin-Cohen bracket of f (weight kappa) and g (weight ell); output
// weight kappa + ell + 2n. The (2 pi i)^{-n} of the classical definition is
// absorbed by the q d/dq derivative, so rational inputs give rational
// brackets.
QSeries rc_bracket(const QSeries& f, const QSeries& g, unsigned n);

}  // namespace thetalift::qexp
