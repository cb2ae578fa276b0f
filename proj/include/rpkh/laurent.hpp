#pragma once

#include <map>
#include <string>
#include <utility>

namespace rpkh {

// Laurent polynomial in q with integer coefficients.
struct LaurentQ {
  std::map<int, long long> coeffs;  // exponent -> coefficient, no zero entries

  static LaurentQ zero() { return {}; }
  static LaurentQ one() { return monomial(1, 0); }
  static LaurentQ monomial(long long c, int e);
  // q + q^{-1}, the graded dimension of the Frobenius algebra V
  static LaurentQ loop();

  LaurentQ& add(long long c, int e);
  bool is_zero() const { return coeffs.empty(); }
  long long coeff(int e) const;

  LaurentQ operator+(const LaurentQ& o) const;
  LaurentQ operator-(const LaurentQ& o) const;
  LaurentQ operator*(const LaurentQ& o) const;
  LaurentQ& operator+=(const LaurentQ& o);
  bool operator==(const LaurentQ& o) const { return coeffs == o.coeffs; }

  LaurentQ pow(int n) const;  // n >= 0

  // Canonical text form, terms ascending in q: "q^-4 - q^-2 + 1".
  std::string str() const;
};

// Polynomial in t, q with integer coefficients, e.g. Poincare polynomials.
struct PoincarePoly {
  std::map<std::pair<int, int>, long long> coeffs;  // (t-exp, q-exp) -> coeff

  PoincarePoly& add(long long c, int i, int m);
  bool is_zero() const { return coeffs.empty(); }
  long long coeff(int i, int m) const;

  PoincarePoly operator+(const PoincarePoly& o) const;
  bool operator==(const PoincarePoly& o) const { return coeffs == o.coeffs; }

  // Substitute t = -1 (Euler characteristic of a bigraded dimension table).
  LaurentQ at_t_minus_one() const;

  // Canonical text form, terms ascending in (t, q): "t^-2 q^-4 + t^-1 q^-2 + 1".
  std::string str() const;

  // Parse the canonical text form back (used by tests and fixtures).
  static PoincarePoly parse(const std::string& s);
};

}  // namespace rpkh
