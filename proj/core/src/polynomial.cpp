#include "pqvol/polynomial.hpp"

#include <stdexcept>

namespace pqvol {

IntPolynomial IntPolynomial::constant(BigInt c) {
  IntPolynomial p;
  p.coeffs_.push_back(std::move(c));
  p.trim();
  return p;
}

IntPolynomial IntPolynomial::monomial(BigInt c, std::size_t exp) {
  IntPolynomial p;
  if (c != 0) {
    p.coeffs_.assign(exp + 1, BigInt(0));
    p.coeffs_[exp] = std::move(c);
  }
  return p;
}

const BigInt& IntPolynomial::coeff(std::size_t k) const {
  static const BigInt zero(0);
  return k < coeffs_.size() ? coeffs_[k] : zero;
}

BigInt IntPolynomial::eval(const BigInt& t) const {
  BigInt acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

IntPolynomial IntPolynomial::scale_argument(const BigInt& c) const {
  std::vector<BigInt> out(coeffs_.size());
  BigInt power(1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = coeffs_[i] * power;
    power *= c;
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    out += mag.get_str();
    if (k == 1) out += "*x";
    else if (k > 1) out += "*x^" + std::to_string(k);
  }
  return out;
}

std::vector<std::string> IntPolynomial::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

IntPolynomial narayana_square_poly(long m) {
  if (m < 1) throw std::invalid_argument("narayana_square_poly: m must be >= 1, got " + std::to_string(m));
  std::vector<BigInt> coeffs(static_cast<std::size_t>(m));
  for (long k = 0; k < m; ++k) {
    BigInt b = binomial(m - 1, k);
    coeffs[static_cast<std::size_t>(k)] = b * b;
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace pqvol
