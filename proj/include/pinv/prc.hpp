#pragma once

#include <span>
#include <variant>
#include <vector>

#include "pinv/decode_common.hpp"
#include "pinv/partial_inverse.hpp"
#include "pinv/poly.hpp"

namespace pinv {

struct PrcDecoded {
  std::vector<Polynomial> codeword;  // residues of the recovered message
  Polynomial message;                // degree < K
  std::vector<Polynomial> error;     // residue-wise y - c
  Polynomial locator;                // monic
  int error_count;                   // erroneous positions
};

using PrcDecodeResult = std::variant<PrcDecoded, DecodeFailure>;

inline bool decode_ok(const PrcDecodeResult& r) {
  return std::holds_alternative<PrcDecoded>(r);
}

// Polynomial remainder code: symbols are residues of a message polynomial
// of degree < K modulo pairwise coprime moduli m_0..m_{n-1}. Reed-Solomon
// codes are the degree-1-moduli special case.
class PrcCode {
 public:
  // Moduli of degree >= 1, pairwise coprime; non-monic inputs are
  // normalized to monic at construction (the scalars are recorded).
  static PrcCode create(const Field& field, std::vector<Polynomial> moduli, int k);

  const Field& field() const { return field_; }
  int n() const { return static_cast<int>(moduli_.size()); }
  int k() const { return k_; }
  int message_degree_bound() const { return K_; }    // K
  int blocklength_degree() const { return N_; }      // N = deg m
  int t() const { return (N_ - K_) / 2; }            // decoding radius
  const std::vector<Polynomial>& moduli() const { return moduli_; }
  const std::vector<FieldElement>& modulus_scalars() const { return scalars_; }
  const Polynomial& modulus() const { return m_; }
  bool all_irreducible() const { return all_irreducible_; }

  std::vector<Polynomial> encode(const Polynomial& message) const;

  // Unique Y with deg Y < N and Y = w_l mod m_l for all l (precomputed CRT
  // idempotents).
  Polynomial crt_inverse(std::span<const Polynomial> residues) const;

  // Product of the moduli at the nonzero positions of the word.
  Polynomial error_locator(std::span<const Polynomial> error) const;

  PrcDecodeResult decode(std::span<const Polynomial> received,
                         const SolveOptions& solve_options = {}) const;

 private:
  PrcCode(Field field, std::vector<Polynomial> moduli, std::vector<FieldElement> scalars, int k);

  Field field_;
  std::vector<Polynomial> moduli_;
  std::vector<FieldElement> scalars_;
  int k_;
  int K_;
  int N_;
  Polynomial m_;
  bool all_irreducible_;
  std::vector<Polynomial> idempotents_;
};

// m / gcd(E, m), monic; 1 when E = 0. The positions whose moduli divide E
// drop out, so for irreducible moduli this equals the error locator.
Polynomial error_factor(const Polynomial& error_transform, const Polynomial& modulus);

}  // namespace pinv
