#include "pinv/field.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace pinv {

namespace {

thread_local FieldOpCounts tl_op_counts;

constexpr std::uint64_t kMaxOrder = (1ull << 31);  // q must stay below this
constexpr std::uint64_t kLutLimit = 1ull << 16;    // log/exp tables up to here

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
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

// --- dense digit polynomials over GF(p), used only for modulus handling ---

int ddeg(const std::vector<code_t>& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

// a mod g, g monic. Both low-to-high digit vectors.
std::vector<code_t> dmod(std::vector<code_t> a, const std::vector<code_t>& g,
                         std::uint64_t p) {
  const int gd = ddeg(g);
  for (int i = ddeg(a); i >= gd; --i) {
    const std::uint64_t c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= gd; ++j) {
      std::uint64_t sub = (c * g[j]) % p;
      std::uint64_t cur = a[i - gd + j];
      a[i - gd + j] = static_cast<code_t>((cur + p - sub) % p);
    }
  }
  a.resize(std::max(gd, 0));
  return a;
}

bool dis_zero(const std::vector<code_t>& a) { return ddeg(a) < 0; }

// Trial division by every monic polynomial of degree 1..e/2.
bool digits_irreducible(const std::vector<code_t>& f, std::uint64_t p) {
  const int e = ddeg(f);
  if (e < 1) return false;
  for (int dd = 1; dd <= e / 2; ++dd) {
    std::uint64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      std::vector<code_t> g(dd + 1, 0);
      std::uint64_t v = t;
      for (int i = 0; i < dd; ++i) {
        g[i] = static_cast<code_t>(v % p);
        v /= p;
      }
      g[dd] = 1;
      if (dis_zero(dmod(f, g, p))) return false;
    }
  }
  return true;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::uint64_t parse_u64(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("expected unsigned integer, got '" + s + "'");
  errno = 0;
  char* end = nullptr;
  std::uint64_t v = std::strtoull(s.c_str(), &end, 10);
  if (errno != 0 || end != s.c_str() + s.size())
    throw std::invalid_argument("integer out of range: '" + s + "'");
  return v;
}

}  // namespace

FieldOpCounts field_op_counts() { return tl_op_counts; }
void reset_field_op_counts() { tl_op_counts = FieldOpCounts{}; }

namespace detail {

class FieldImpl {
 public:
  FieldImpl(std::uint64_t p, int e, std::vector<code_t> modulus)
      : p_(p), e_(e), modulus_(std::move(modulus)) {
    if (p_ < 2 || !is_prime(p_)) throw std::invalid_argument("characteristic must be prime");
    if (e_ < 1) throw std::invalid_argument("extension degree must be >= 1");
    q_ = 1;
    for (int i = 0; i < e_; ++i) {
      q_ *= p_;
      if (q_ >= kMaxOrder) throw std::invalid_argument("field order must be < 2^31");
    }
    if (e_ == 1) {
      if (!modulus_.empty())
        throw std::invalid_argument("prime field takes no modulus");
    } else {
      if (static_cast<int>(modulus_.size()) != e_ + 1)
        throw std::invalid_argument("modulus must have degree e");
      for (code_t c : modulus_)
        if (c >= p_) throw std::invalid_argument("modulus digit out of range");
      if (modulus_[e_] != 1)
        throw std::invalid_argument("modulus must be monic");
      if (!digits_irreducible(modulus_, p_))
        throw std::invalid_argument("modulus is reducible");
      if (p_ == 2) {
        mod_bits_ = 0;
        for (int i = 0; i <= e_; ++i)
          if (modulus_[i]) mod_bits_ |= 1ull << i;
      }
      if (q_ <= kLutLimit) build_tables();
    }
  }

  std::uint64_t p() const { return p_; }
  int e() const { return e_; }
  std::uint64_t q() const { return q_; }
  const std::vector<code_t>& modulus() const { return modulus_; }

  bool same_spec(const FieldImpl& o) const {
    return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
  }

  code_t add(code_t a, code_t b) const {
    ++tl_op_counts.adds;
    if (e_ == 1) {
      std::uint64_t s = static_cast<std::uint64_t>(a) + b;
      if (s >= p_) s -= p_;
      return static_cast<code_t>(s);
    }
    if (p_ == 2) return a ^ b;
    return digitwise(a, b, /*subtract=*/false);
  }

  code_t sub(code_t a, code_t b) const {
    ++tl_op_counts.adds;
    if (e_ == 1)
      return static_cast<code_t>((static_cast<std::uint64_t>(a) + p_ - b) % p_);
    if (p_ == 2) return a ^ b;
    return digitwise(a, b, /*subtract=*/true);
  }

  code_t neg(code_t a) const { return sub(0, a); }

  code_t mul(code_t a, code_t b) const {
    ++tl_op_counts.muls;
    if (e_ == 1) return static_cast<code_t>((static_cast<std::uint64_t>(a) * b) % p_);
    if (has_tables_)
      return (a && b) ? exp_[log_[a] + log_[b]] : 0;
    if (p_ == 2) return mul_gf2(a, b);
    return mul_digits(a, b);
  }

  code_t inv(code_t a) const {
    ++tl_op_counts.invs;
    if (a == 0) throw std::domain_error("division by zero field element");
    if (e_ == 1) return inv_prime(a);
    if (has_tables_) return exp_[q_ - 1 - log_[a]];
    return pow_nocount(a, q_ - 2);
  }

  code_t pow(code_t a, long long n) const {
    if (a == 0) {
      if (n < 0) throw std::domain_error("zero to a negative power");
      return n == 0 ? 1 : 0;
    }
    const long long group = static_cast<long long>(q_) - 1;
    long long r = n % group;
    if (r < 0) r += group;
    return pow_nocount(a, static_cast<std::uint64_t>(r));
  }

 private:
  code_t pow_nocount(code_t a, std::uint64_t n) const {
    code_t result = 1;
    code_t base = a;
    while (n > 0) {
      if (n & 1) result = mul(result, base);
      base = mul(base, base);
      n >>= 1;
    }
    return result;
  }

  code_t inv_prime(code_t a) const {
    // extended Euclid on integers
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = a;
    while (new_r != 0) {
      std::int64_t quot = r / new_r;
      std::int64_t tmp = t - quot * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - quot * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<code_t>(t);
  }

  code_t digitwise(code_t a, code_t b, bool subtract) const {
    code_t out = 0;
    std::uint64_t scale = 1;
    for (int i = 0; i < e_; ++i) {
      std::uint64_t da = a % p_, db = b % p_;
      a = static_cast<code_t>(a / p_);
      b = static_cast<code_t>(b / p_);
      std::uint64_t dc = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
      out += static_cast<code_t>(dc * scale);
      scale *= p_;
    }
    return out;
  }

  code_t mul_gf2(code_t a, code_t b) const {
    // carryless multiply then fold by the modulus bit pattern
    std::uint64_t prod = 0;
    std::uint64_t aa = a;
    std::uint64_t bb = b;
    while (bb) {
      if (bb & 1) prod ^= aa;
      aa <<= 1;
      bb >>= 1;
    }
    for (int bit = 2 * e_ - 2; bit >= e_; --bit)
      if ((prod >> bit) & 1) prod ^= mod_bits_ << (bit - e_);
    return static_cast<code_t>(prod);
  }

  code_t mul_digits(code_t a, code_t b) const {
    // p < 2^16 whenever e >= 2 (q < 2^31), so the convolution fits in int64
    std::int64_t acc[64] = {};
    std::uint32_t da[32], db[32];
    code_t av = a, bv = b;
    for (int i = 0; i < e_; ++i) {
      da[i] = static_cast<std::uint32_t>(av % p_);
      av = static_cast<code_t>(av / p_);
      db[i] = static_cast<std::uint32_t>(bv % p_);
      bv = static_cast<code_t>(bv / p_);
    }
    for (int i = 0; i < e_; ++i) {
      if (da[i] == 0) continue;
      for (int j = 0; j < e_; ++j)
        acc[i + j] += static_cast<std::int64_t>(da[i]) * db[j];
    }
    const std::int64_t sp = static_cast<std::int64_t>(p_);
    for (int idx = 2 * e_ - 2; idx >= e_; --idx) {
      std::int64_t c = ((acc[idx] % sp) + sp) % sp;
      if (c == 0) continue;
      for (int j = 0; j <= e_; ++j)
        acc[idx - e_ + j] -= c * modulus_[j];
    }
    code_t out = 0;
    std::uint64_t scale = 1;
    for (int i = 0; i < e_; ++i) {
      std::uint64_t digit = static_cast<std::uint64_t>(((acc[i] % sp) + sp) % sp);
      out += static_cast<code_t>(digit * scale);
      scale *= p_;
    }
    return out;
  }

  void build_tables() {
    // find a generator of the multiplicative group, scanning canonical order
    const std::uint64_t group = q_ - 1;
    const auto factors = prime_factors(group);
    code_t gen = 0;
    for (std::uint64_t c = 1; c < q_; ++c) {
      code_t cand = static_cast<code_t>(c);
      bool primitive = true;
      for (std::uint64_t f : factors) {
        if (pow_nocount(cand, group / f) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        gen = cand;
        break;
      }
    }
    exp_.resize(2 * group);
    log_.assign(q_, 0);
    code_t cur = 1;
    for (std::uint64_t i = 0; i < group; ++i) {
      exp_[i] = cur;
      exp_[i + group] = cur;
      log_[cur] = static_cast<std::uint32_t>(i);
      cur = mul(cur, gen);
    }
    has_tables_ = true;
  }

  std::uint64_t p_;
  int e_;
  std::uint64_t q_ = 0;
  std::vector<code_t> modulus_;
  std::uint64_t mod_bits_ = 0;
  bool has_tables_ = false;
  std::vector<code_t> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace detail

// --- Field ---

Field::Field(std::shared_ptr<const detail::FieldImpl> impl)
    : impl_(std::move(impl)) {}

Field Field::prime(std::uint64_t p) {
  return Field(std::make_shared<detail::FieldImpl>(p, 1, std::vector<code_t>{}));
}

Field Field::extension(std::uint64_t p, int e) {
  if (e == 1) return prime(p);
  return Field(std::make_shared<detail::FieldImpl>(p, e, find_irreducible(p, e)));
}

Field Field::extension(std::uint64_t p, int e, std::vector<code_t> modulus) {
  if (e == 1 && modulus.empty()) return prime(p);
  return Field(std::make_shared<detail::FieldImpl>(p, e, std::move(modulus)));
}

Field Field::parse(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.size() == 2 && parts[0] == "prime") return prime(parse_u64(parts[1]));
  if (parts[0] == "ext" && (parts.size() == 3 || parts.size() == 4)) {
    std::uint64_t p = parse_u64(parts[1]);
    std::uint64_t e = parse_u64(parts[2]);
    if (e < 1 || e > 30) throw std::invalid_argument("extension degree out of range");
    if (parts.size() == 3) return extension(p, static_cast<int>(e));
    std::vector<code_t> modulus;
    for (const auto& d : split(parts[3], ','))
      modulus.push_back(static_cast<code_t>(parse_u64(d)));
    return extension(p, static_cast<int>(e), std::move(modulus));
  }
  throw std::invalid_argument("bad field spec '" + spec +
                              "' (want prime:<p> or ext:<p>:<e>[:<mods>])");
}

std::string Field::to_string() const {
  std::ostringstream os;
  if (extension_degree() == 1) {
    os << "prime:" << characteristic();
  } else {
    os << "ext:" << characteristic() << ":" << extension_degree() << ":";
    const auto& m = modulus();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) os << ",";
      os << m[i];
    }
  }
  return os.str();
}

std::uint64_t Field::characteristic() const { return impl_->p(); }
int Field::extension_degree() const { return impl_->e(); }
std::uint64_t Field::order() const { return impl_->q(); }
const std::vector<code_t>& Field::modulus() const { return impl_->modulus(); }

bool Field::operator==(const Field& other) const {
  return impl_ == other.impl_ || impl_->same_spec(*other.impl_);
}

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

FieldElement Field::element(code_t code) const {
  if (code >= order()) throw std::invalid_argument("element code out of range");
  return FieldElement(*this, code);
}

FieldElement Field::from_residues(const std::vector<code_t>& residues) const {
  const int e = extension_degree();
  if (static_cast<int>(residues.size()) != e)
    throw std::invalid_argument("expected exactly e residues");
  const std::uint64_t p = characteristic();
  std::uint64_t code = 0, scale = 1;
  for (int i = 0; i < e; ++i) {
    if (residues[i] >= p) throw std::invalid_argument("residue out of range");
    code += residues[i] * scale;
    scale *= p;
  }
  return FieldElement(*this, static_cast<code_t>(code));
}

FieldElement Field::parse_element(const std::string& text) const {
  if (extension_degree() == 1) {
    std::uint64_t v = parse_u64(text);
    if (v >= order()) throw std::invalid_argument("residue out of range: " + text);
    return FieldElement(*this, static_cast<code_t>(v));
  }
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("expected [c0 c1 ...] element, got '" + text + "'");
  std::vector<code_t> residues;
  std::istringstream is(text.substr(1, text.size() - 2));
  std::string tok;
  while (is >> tok) residues.push_back(static_cast<code_t>(parse_u64(tok)));
  return from_residues(residues);
}

std::string Field::format_element(const FieldElement& a) const {
  if (*this != a.field()) throw std::invalid_argument("element from another field");
  if (extension_degree() == 1) return std::to_string(a.code());
  std::ostringstream os;
  os << "[";
  code_t v = a.code();
  const std::uint64_t p = characteristic();
  for (int i = 0; i < extension_degree(); ++i) {
    if (i) os << " ";
    os << v % p;
    v = static_cast<code_t>(v / p);
  }
  os << "]";
  return os.str();
}

ElementRange Field::enumerate() const { return ElementRange(*this); }

FieldElement Field::find_primitive_nth_root(std::uint64_t n) const {
  const std::uint64_t group = order() - 1;
  if (n < 1 || group % n != 0)
    throw std::invalid_argument("n must divide q-1");
  const auto factors = prime_factors(n);
  for (std::uint64_t c = 0; c < order(); ++c) {
    code_t cand = static_cast<code_t>(c);
    if (pow_code(cand, static_cast<long long>(n)) != 1) continue;
    bool exact = true;
    for (std::uint64_t f : factors) {
      if (pow_code(cand, static_cast<long long>(n / f)) == 1) {
        exact = false;
        break;
      }
    }
    if (exact) return FieldElement(*this, cand);
  }
  throw std::logic_error("no element of the requested order");  // unreachable
}

code_t Field::add_code(code_t a, code_t b) const { return impl_->add(a, b); }
code_t Field::sub_code(code_t a, code_t b) const { return impl_->sub(a, b); }
code_t Field::neg_code(code_t a) const { return impl_->neg(a); }
code_t Field::mul_code(code_t a, code_t b) const { return impl_->mul(a, b); }
code_t Field::inv_code(code_t a) const { return impl_->inv(a); }
code_t Field::pow_code(code_t a, long long n) const { return impl_->pow(a, n); }

// --- FieldElement ---

namespace {
void require_same_field(const Field& a, const Field& b) {
  if (a != b) throw std::invalid_argument("elements from mismatched fields");
}
}  // namespace

FieldElement::FieldElement(Field field, code_t code)
    : field_(std::move(field)), code_(code) {
  if (code_ >= field_.order())
    throw std::invalid_argument("element code out of range");
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  require_same_field(field_, rhs.field_);
  return FieldElement(field_, field_.add_code(code_, rhs.code_));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  require_same_field(field_, rhs.field_);
  return FieldElement(field_, field_.sub_code(code_, rhs.code_));
}

FieldElement FieldElement::operator-() const {
  return FieldElement(field_, field_.neg_code(code_));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  require_same_field(field_, rhs.field_);
  return FieldElement(field_, field_.mul_code(code_, rhs.code_));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  require_same_field(field_, rhs.field_);
  return FieldElement(field_, field_.mul_code(code_, field_.inv_code(rhs.code_)));
}

FieldElement FieldElement::inv() const {
  return FieldElement(field_, field_.inv_code(code_));
}

FieldElement FieldElement::pow(long long n) const {
  return FieldElement(field_, field_.pow_code(code_, n));
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  return field_ == rhs.field_ && code_ == rhs.code_;
}

FieldElement ElementRange::iterator::operator*() const {
  return FieldElement(*field_, static_cast<code_t>(code_));
}

// --- free functions ---

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

std::vector<code_t> find_irreducible(std::uint64_t p, int e) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (e < 1) throw std::invalid_argument("degree must be >= 1");
  std::uint64_t count = 1;
  for (int i = 0; i < e; ++i) {
    count *= p;
    if (count >= kMaxOrder) throw std::invalid_argument("field order must be < 2^31");
  }
  for (std::uint64_t t = 0; t < count; ++t) {
    std::vector<code_t> f(e + 1, 0);
    std::uint64_t v = t;
    for (int i = 0; i < e; ++i) {
      f[i] = static_cast<code_t>(v % p);
      v /= p;
    }
    f[e] = 1;
    if (digits_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace pinv
