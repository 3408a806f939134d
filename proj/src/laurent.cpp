#include "laurent.hpp"

#include <sstream>

namespace knotkit {

LaurentPoly LaurentPoly::monomial(mpz_class coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exponent] = std::move(coeff);
  return p;
}

mpz_class LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_[exponent] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e * k, c);
  return r;
}

mpz_class LaurentPoly::exponent_moment(int m) const {
  mpz_class total = 0;
  for (const auto& [e, c] : terms_) {
    mpz_class p = 1;
    for (int i = 0; i < m; ++i) p *= e;
    total += c * p;
  }
  return total;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << (c > 0 ? " + " : " - ");
    if (first && c < 0) out << "-";
    mpz_class a = abs(c);
    first = false;
    if (a != 1 || e == 0) out << a.get_str();
    if (e != 0) {
      if (a != 1) out << "*";
      out << var;
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace knotkit
