#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace pinv {

// Canonical element index, 0 <= code < q. For e = 1 this is the residue
// itself; for e > 1 it is the base-p digit packing sum(c_i * p^i) of the
// coefficient sequence, so code order doubles as the canonical enumeration
// order of the field.
using code_t = std::uint32_t;

// Running per-thread tally of field operations. Benchmarks read and reset
// these around timed sections.
struct FieldOpCounts {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  std::uint64_t invs = 0;
};
FieldOpCounts field_op_counts();
void reset_field_op_counts();

namespace detail {
class FieldImpl;
}

class FieldElement;
class ElementRange;

// Arithmetic domain GF(p^e) with p prime, e >= 1 and p^e < 2^31 (keeps all
// intermediate products inside 64-bit arithmetic). Immutable once built;
// cheap to copy and safe to share between threads.
class Field {
 public:
  static Field prime(std::uint64_t p);
  // Modulus omitted: the lexicographically-first monic irreducible of
  // degree e over GF(p) is used (see find_irreducible).
  static Field extension(std::uint64_t p, int e);
  static Field extension(std::uint64_t p, int e, std::vector<code_t> modulus);

  // Text syntax: "prime:<p>" or "ext:<p>:<e>[:<c0,c1,...,ce>]" with the
  // modulus coefficients low-to-high.
  static Field parse(const std::string& spec);
  std::string to_string() const;

  std::uint64_t characteristic() const;
  int extension_degree() const;
  std::uint64_t order() const;  // q = p^e
  // Modulus digits low-to-high, length e+1, monic; empty for e == 1.
  const std::vector<code_t>& modulus() const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(code_t code) const;  // checked: code < q
  // For e = 1 a single residue; for e > 1 exactly e residues low-to-high.
  FieldElement from_residues(const std::vector<code_t>& residues) const;

  // Element text: decimal residue for e = 1, "[c0 c1 ... c_{e-1}]" for e > 1.
  FieldElement parse_element(const std::string& text) const;
  std::string format_element(const FieldElement& a) const;

  // All q elements in canonical order (code 0, 1, ..., q-1); lazy.
  ElementRange enumerate() const;

  // First element (canonical order) of exact multiplicative order n.
  // Requires n >= 1 and n | q-1.
  FieldElement find_primitive_nth_root(std::uint64_t n) const;

  // Code-level arithmetic; the hot loops in poly/ work on raw codes.
  code_t add_code(code_t a, code_t b) const;
  code_t sub_code(code_t a, code_t b) const;
  code_t neg_code(code_t a) const;
  code_t mul_code(code_t a, code_t b) const;
  code_t inv_code(code_t a) const;
  code_t pow_code(code_t a, long long n) const;

  const detail::FieldImpl& impl() const { return *impl_; }

 private:
  explicit Field(std::shared_ptr<const detail::FieldImpl> impl);
  std::shared_ptr<const detail::FieldImpl> impl_;
};

// A fully reduced element of a Field; representation unique per element.
class FieldElement {
 public:
  FieldElement(Field field, code_t code);

  const Field& field() const { return field_; }
  code_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement inv() const;
  FieldElement pow(long long n) const;

  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

  std::string to_string() const { return field_.format_element(*this); }

 private:
  Field field_;
  code_t code_;
};

class ElementRange {
 public:
  class iterator {
   public:
    using value_type = FieldElement;
    using difference_type = std::int64_t;

    iterator(const Field* field, std::uint64_t code)
        : field_(field), code_(code) {}
    FieldElement operator*() const;
    iterator& operator++() {
      ++code_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++code_;
      return old;
    }
    bool operator==(const iterator& o) const { return code_ == o.code_; }
    bool operator!=(const iterator& o) const { return code_ != o.code_; }

   private:
    const Field* field_;
    std::uint64_t code_;
  };

  explicit ElementRange(Field field) : field_(std::move(field)) {}
  iterator begin() const { return iterator(&field_, 0); }
  iterator end() const { return iterator(&field_, field_.order()); }
  std::uint64_t size() const { return field_.order(); }

 private:
  Field field_;
};

bool is_prime(std::uint64_t n);

// Lexicographically-first monic irreducible of degree e over GF(p), the
// coefficient sequence (low-to-high) being the search key. Returns e+1
// digits low-to-high with the leading digit 1.
std::vector<code_t> find_irreducible(std::uint64_t p, int e);

}  // namespace pinv
