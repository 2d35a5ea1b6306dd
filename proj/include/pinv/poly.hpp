#pragma once

#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pinv/field.hpp"

namespace pinv {

// Degree of the zero polynomial: below every integer, so the paper-style
// degree inequalities read literally.
inline constexpr int kNegInf = std::numeric_limits<int>::min();

// Dense univariate polynomial over a Field. Coefficient index l holds the
// coefficient of x^l. Canonical: the zero polynomial is the empty sequence,
// otherwise the last coefficient is nonzero. Immutable value type.
class Polynomial {
 public:
  explicit Polynomial(Field field) : field_(std::move(field)) {}
  Polynomial(Field field, std::vector<code_t> coeffs);

  static Polynomial zero(const Field& field) { return Polynomial(field); }
  static Polynomial one(const Field& field);
  static Polynomial x(const Field& field);
  static Polynomial constant(const FieldElement& c);
  // c * x^deg
  static Polynomial monomial(const Field& field, int deg, code_t c = 1);
  static Polynomial from_elements(const Field& field,
                                  std::span<const FieldElement> coeffs);

  const Field& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }
  // Leading coefficient; lcf(0) = 0.
  FieldElement lcf() const;
  // Coefficient of x^l; zero for l < 0 or l > degree.
  FieldElement coeff(int l) const;
  code_t coeff_code(int l) const {
    return (l < 0 || l >= static_cast<int>(c_.size())) ? 0 : c_[static_cast<std::size_t>(l)];
  }
  const std::vector<code_t>& codes() const { return c_; }

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial scalar_mul(const FieldElement& s) const;
  Polynomial scalar_mul_code(code_t s) const;
  // Multiply by x^t, t >= 0.
  Polynomial shift(int t) const;
  Polynomial monic() const;  // requires nonzero

  FieldElement eval(const FieldElement& beta) const;
  code_t eval_code(code_t beta) const;

  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  // Text format: comma-separated coefficients low-to-high ("1,0,3" is
  // 3x^2+1); extension-field coefficients as "[c0 c1 ...]" groups. The zero
  // polynomial prints as "0".
  std::string to_string() const;
  static Polynomial parse(const Field& field, const std::string& text);

 private:
  void trim();
  Field field_;
  std::vector<code_t> c_;
};

// Quotient and remainder: a = q*m + r with deg r < deg m. m must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& m);

// Monic greatest common divisor; gcd(0, m) = monic(m). Errors on gcd(0, 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Unique polynomial of degree < points.size() through all (beta, value)
// pairs; the beta values must be pairwise distinct.
Polynomial interpolate(const Field& field,
                       std::span<const std::pair<FieldElement, FieldElement>> points);

// Deterministic irreducibility test over the polynomial's field (Rabin:
// Frobenius powers plus gcds). Polynomials of degree < 1 are not considered
// irreducible.
bool is_irreducible(const Polynomial& f);

}  // namespace pinv
