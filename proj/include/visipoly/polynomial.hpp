#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace visipoly {

/// Univariate polynomial with exact integer coefficients (GMP-backed, so
/// arithmetic never overflows). Coefficient i is the coefficient of x^i;
/// no trailing zero is stored, the zero polynomial has no coefficients.
///
/// Visibility polynomials are nonnegative with constant term 1; signed
/// coefficients are still admitted because inclusion-exclusion produces
/// signed intermediate terms.
class Polynomial {
 public:
  Polynomial() = default;  // the zero polynomial

  explicit Polynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  static Polynomial constant(const mpz_class& c) {
    return c == 0 ? Polynomial() : Polynomial(std::vector<mpz_class>{c});
  }

  static Polynomial one() { return constant(1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  bool is_zero() const { return coeffs_.empty(); }

  const mpz_class& coeff(int i) const;

  const mpz_class& leading() const;

  bool all_coeffs_nonnegative() const;

  mpz_class evaluate_at_one() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Multiplication by x^k, k >= 0.
  Polynomial shifted(int k) const;

  Polynomial scaled(const mpz_class& s) const;

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// "1 + 3*x + 3*x^2"; zero terms omitted; the zero polynomial is "0".
  std::string str() const;

  /// Decimal strings, index = degree; ["0"] for the zero polynomial.
  std::vector<std::string> coeff_strings() const;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<mpz_class> coeffs_;
};

/// (1+x)^k: coefficient i is C(k,i).
Polynomial binomial_power(int k);

}  // namespace visipoly
