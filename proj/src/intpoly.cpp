#include "bip/intpoly.hpp"

#include <stdexcept>

namespace bip {

IntPolynomial::IntPolynomial(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long long IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

long long IntPolynomial::at(long long t) const {
  long long acc = 0;
  for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k];
  return acc;
}

void IntPolynomial::add_term(int exponent, long long c) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (static_cast<size_t>(exponent) >= coeffs_.size())
    coeffs_.resize(static_cast<size_t>(exponent) + 1, 0);
  coeffs_[static_cast<size_t>(exponent)] += c;
  trim();
}

IntPolynomial IntPolynomial::stretch(int k) const {
  if (k < 1) throw std::invalid_argument("stretch factor must be >= 1");
  if (coeffs_.empty()) return {};
  std::vector<long long> out((coeffs_.size() - 1) * static_cast<size_t>(k) + 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<size_t>(k)] = coeffs_[i];
  return IntPolynomial(std::move(out));
}

bool IntPolynomial::palindromic() const {
  for (size_t i = 0, j = coeffs_.size(); i < j; ++i)
    if (coeffs_[i] != coeffs_[coeffs_.size() - 1 - i]) return false;
  return true;
}

std::string IntPolynomial::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    long long c = coeffs_[k];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    long long a = c > 0 ? c : -c;
    if (k == 0) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a);
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace bip
