#include "visipoly/polynomial.hpp"

#include "visipoly/errors.hpp"

namespace visipoly {

namespace {
const mpz_class kZero = 0;
}

const mpz_class& Polynomial::coeff(int i) const {
  if (i < 0) throw InvalidArgument("negative coefficient index");
  if (static_cast<std::size_t>(i) >= coeffs_.size()) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const mpz_class& Polynomial::leading() const {
  if (coeffs_.empty()) return kZero;
  return coeffs_.back();
}

bool Polynomial::all_coeffs_nonnegative() const {
  for (const mpz_class& c : coeffs_)
    if (c < 0) return false;
  return true;
}

mpz_class Polynomial::evaluate_at_one() const {
  mpz_class s = 0;
  for (const mpz_class& c : coeffs_) s += c;
  return s;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(int k) const {
  if (k < 0) throw InvalidArgument("shift exponent must be >= 0");
  if (is_zero() || k == 0) return k == 0 ? *this : Polynomial();
  std::vector<mpz_class> out(static_cast<std::size_t>(k), 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const mpz_class& s) const {
  std::vector<mpz_class> out(coeffs_);
  for (mpz_class& c : out) c *= s;
  return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    mpz_class mag = neg ? mpz_class(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) {
        out += mag.get_str();
        out += "*";
      }
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::vector<std::string> Polynomial::coeff_strings() const {
  if (coeffs_.empty()) return {"0"};
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const mpz_class& c : coeffs_) out.push_back(c.get_str());
  return out;
}

Polynomial binomial_power(int k) {
  if (k < 0) throw InvalidArgument("binomial_power exponent must be >= 0");
  std::vector<mpz_class> out(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i)
    mpz_bin_uiui(out[static_cast<std::size_t>(i)].get_mpz_t(), static_cast<unsigned long>(k),
                 static_cast<unsigned long>(i));
  return Polynomial(std::move(out));
}

}  // namespace visipoly
