#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace knotkit {

/// Exact single-variable Laurent polynomial with arbitrary-precision integer
/// coefficients. The variable is abstract; invariant code documents whether
/// exponents are in units of A (bracket) or t^(1/2) (Jones).
class LaurentPoly {
public:
  LaurentPoly() = default;
  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(1, 0); }
  static LaurentPoly monomial(mpz_class coeff, int exponent);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, mpz_class>& terms() const { return terms_; }
  mpz_class coeff(int exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  void add_term(int exponent, const mpz_class& c);
  LaurentPoly scaled(const mpz_class& c) const;

  /// x ↦ x^k (k may be negative; exponents scale by k).
  LaurentPoly substitute_power(int k) const;
  /// x ↦ x⁻¹.
  LaurentPoly mirrored() const { return substitute_power(-1); }

  /// Σ c_e · e^m over all terms — the m-th moment of the exponents,
  /// exact. Moment 0 is the evaluation at 1.
  mpz_class exponent_moment(int m) const;

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  /// Sorted "c*x^e" term list, e ascending; "0" when empty.
  std::string str(const std::string& var = "t") const;

private:
  std::map<int, mpz_class> terms_;  // exponent -> nonzero coefficient
};

}  // namespace knotkit
