#include "pinv/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pinv {

namespace {

void require_same_field(const Field& a, const Field& b) {
  if (a != b) throw std::invalid_argument("polynomials over mismatched fields");
}

std::vector<std::uint64_t> prime_factors_int(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Polynomial::Polynomial(Field field, std::vector<code_t> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  for (code_t c : c_)
    if (c >= field_.order())
      throw std::invalid_argument("coefficient code out of range");
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::one(const Field& field) {
  return Polynomial(field, {1});
}

Polynomial Polynomial::x(const Field& field) {
  return Polynomial(field, {0, 1});
}

Polynomial Polynomial::constant(const FieldElement& c) {
  return Polynomial(c.field(), {c.code()});
}

Polynomial Polynomial::monomial(const Field& field, int deg, code_t c) {
  if (deg < 0) throw std::invalid_argument("monomial degree must be >= 0");
  std::vector<code_t> v(static_cast<std::size_t>(deg) + 1, 0);
  v.back() = c;
  return Polynomial(field, std::move(v));
}

Polynomial Polynomial::from_elements(const Field& field,
                                     std::span<const FieldElement> coeffs) {
  std::vector<code_t> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    require_same_field(field, c.field());
    v.push_back(c.code());
  }
  return Polynomial(field, std::move(v));
}

FieldElement Polynomial::lcf() const {
  return FieldElement(field_, c_.empty() ? 0 : c_.back());
}

FieldElement Polynomial::coeff(int l) const {
  return FieldElement(field_, coeff_code(l));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  require_same_field(field_, rhs.field_);
  std::vector<code_t> out(std::max(c_.size(), rhs.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    code_t a = i < c_.size() ? c_[i] : 0;
    code_t b = i < rhs.c_.size() ? rhs.c_[i] : 0;
    out[i] = field_.add_code(a, b);
  }
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  require_same_field(field_, rhs.field_);
  std::vector<code_t> out(std::max(c_.size(), rhs.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    code_t a = i < c_.size() ? c_[i] : 0;
    code_t b = i < rhs.c_.size() ? rhs.c_[i] : 0;
    out[i] = field_.sub_code(a, b);
  }
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<code_t> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = field_.neg_code(c_[i]);
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  require_same_field(field_, rhs.field_);
  if (c_.empty() || rhs.c_.empty()) return Polynomial(field_);
  std::vector<code_t> out(c_.size() + rhs.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      if (rhs.c_[j] == 0) continue;
      out[i + j] = field_.add_code(out[i + j], field_.mul_code(c_[i], rhs.c_[j]));
    }
  }
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::scalar_mul(const FieldElement& s) const {
  require_same_field(field_, s.field());
  return scalar_mul_code(s.code());
}

Polynomial Polynomial::scalar_mul_code(code_t s) const {
  if (s == 0) return Polynomial(field_);
  std::vector<code_t> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = field_.mul_code(c_[i], s);
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::shift(int t) const {
  if (t < 0) throw std::invalid_argument("shift amount must be >= 0");
  if (c_.empty()) return Polynomial(field_);
  std::vector<code_t> out(static_cast<std::size_t>(t), 0);
  out.insert(out.end(), c_.begin(), c_.end());
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) throw std::domain_error("monic of the zero polynomial");
  if (c_.back() == 1) return *this;
  return scalar_mul_code(field_.inv_code(c_.back()));
}

FieldElement Polynomial::eval(const FieldElement& beta) const {
  require_same_field(field_, beta.field());
  return FieldElement(field_, eval_code(beta.code()));
}

code_t Polynomial::eval_code(code_t beta) const {
  code_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = field_.add_code(field_.mul_code(acc, beta), c_[i]);
  return acc;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  return field_ == rhs.field_ && c_ == rhs.c_;
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return field_.format_element(field_.zero());
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << field_.format_element(FieldElement(field_, c_[i]));
  }
  return os.str();
}

Polynomial Polynomial::parse(const Field& field, const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty polynomial text");
  std::vector<code_t> coeffs;
  std::string cur;
  int bracket_depth = 0;
  auto flush = [&] {
    if (cur.empty()) throw std::invalid_argument("empty coefficient in '" + text + "'");
    coeffs.push_back(field.parse_element(cur).code());
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '[') ++bracket_depth;
    if (ch == ']') --bracket_depth;
    if (ch == ',' && bracket_depth == 0) {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(ch)) || bracket_depth > 0) {
      cur += ch;
    }
  }
  flush();
  return Polynomial(field, std::move(coeffs));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& m) {
  require_same_field(a.field(), m.field());
  if (m.is_zero()) throw std::domain_error("division by zero polynomial");
  const Field& f = a.field();
  const int dm = m.degree();
  if (a.degree() < dm) return {Polynomial(f), a};

  std::vector<code_t> rem = a.codes();
  std::vector<code_t> quot(static_cast<std::size_t>(a.degree() - dm) + 1, 0);
  const code_t lead_inv = f.inv_code(m.codes().back());
  for (int i = a.degree(); i >= dm; --i) {
    code_t c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    code_t scale = f.mul_code(c, lead_inv);
    quot[static_cast<std::size_t>(i - dm)] = scale;
    for (int j = 0; j <= dm; ++j) {
      std::size_t idx = static_cast<std::size_t>(i - dm + j);
      rem[idx] = f.sub_code(rem[idx], f.mul_code(scale, m.codes()[static_cast<std::size_t>(j)]));
    }
  }
  rem.resize(static_cast<std::size_t>(dm));
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0)");
  Polynomial r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Polynomial r2 = divmod(r0, r1).second;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0.monic();
}

Polynomial interpolate(const Field& field,
                       std::span<const std::pair<FieldElement, FieldElement>> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    require_same_field(field, points[i].first.field());
    require_same_field(field, points[i].second.field());
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("duplicate interpolation point");
  }
  if (points.empty()) return Polynomial(field);

  // full product, then per-point synthetic division by (x - beta_j)
  Polynomial product = Polynomial::one(field);
  for (const auto& [beta, value] : points) {
    (void)value;
    product = product * Polynomial(field, {field.neg_code(beta.code()), 1});
  }
  Polynomial acc(field);
  for (const auto& [beta, value] : points) {
    Polynomial numer = divmod(product, Polynomial(field, {field.neg_code(beta.code()), 1})).first;
    FieldElement denom = numer.eval(beta);
    acc = acc + numer.scalar_mul(value / denom);
  }
  return acc;
}

bool is_irreducible(const Polynomial& f) {
  const int r = f.degree();
  if (r < 1) return false;
  if (r == 1) return true;
  const Field& field = f.field();
  const std::uint64_t q = field.order();
  const Polynomial fm = f.monic();
  const Polynomial x = Polynomial::x(field);

  auto mulmod = [&](const Polynomial& a, const Polynomial& b) {
    return divmod(a * b, fm).second;
  };
  auto pow_q = [&](Polynomial base) {
    // base^q mod f by square-and-multiply
    Polynomial result = Polynomial::one(field);
    std::uint64_t n = q;
    while (n > 0) {
      if (n & 1) result = mulmod(result, base);
      base = mulmod(base, base);
      n >>= 1;
    }
    return result;
  };

  // Rabin: x^(q^r) == x mod f, and gcd(x^(q^(r/t)) - x, f) = 1 for every
  // prime t dividing r.
  std::vector<Polynomial> frob;  // frob[i] = x^(q^(i+1)) mod f
  Polynomial cur = divmod(x, fm).second;
  for (int i = 0; i < r; ++i) {
    cur = pow_q(cur);
    frob.push_back(cur);
  }
  if (frob.back() != divmod(x, fm).second) return false;
  for (std::uint64_t t : prime_factors_int(static_cast<std::uint64_t>(r))) {
    const Polynomial& h = frob[static_cast<std::size_t>(r / static_cast<int>(t)) - 1];
    Polynomial diff = h - divmod(x, fm).second;
    if (diff.is_zero()) return false;
    if (gcd(diff, fm).degree() != 0) return false;
  }
  return true;
}

}  // namespace pinv
