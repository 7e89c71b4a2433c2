#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bip {

// Polynomial with exact integer coefficients, coeffs_[k] = coefficient of t^k.
// Trailing zeros are trimmed; the zero polynomial has empty coeffs.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<long long> coeffs);

  static IntPolynomial one() { return IntPolynomial({1}); }

  const std::vector<long long>& coeffs() const { return coeffs_; }
  long long coeff(int k) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }

  long long at(long long t) const;
  void add_term(int exponent, long long c);

  // p(t^k): stretches exponents by k.
  IntPolynomial stretch(int k) const;

  bool palindromic() const;

  // Human-readable rendering: "1 + 7t^2 + 11t^4 + t^6".
  std::string str(const std::string& var = "t") const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  void trim();
  std::vector<long long> coeffs_;
};

}  // namespace bip
