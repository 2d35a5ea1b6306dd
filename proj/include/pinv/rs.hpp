#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "pinv/decode_common.hpp"
#include "pinv/partial_inverse.hpp"
#include "pinv/poly.hpp"

namespace pinv {

struct RsDecoded {
  std::vector<FieldElement> codeword;
  Polynomial message;  // C(x), degree < k
  std::vector<FieldElement> error;
  Polynomial locator;  // monic
  int error_count;     // Hamming weight of the error word
};

using RsDecodeResult = std::variant<RsDecoded, DecodeFailure>;

inline bool decode_ok(const RsDecodeResult& r) {
  return std::holds_alternative<RsDecoded>(r);
}

// Reed-Solomon code as evaluation at n distinct points beta_0..beta_{n-1}:
// codewords are (a(beta_0), ..., a(beta_{n-1})) for deg a < k. When the
// betas are the powers of a primitive n-th root of unity the modulus
// m = prod (x - beta_l) collapses to x^n - 1 and the transform becomes a
// DFT (dft_mode).
class RsCode {
 public:
  static RsCode with_betas(const Field& field, int n, int k,
                           std::vector<FieldElement> betas);
  // betas = alpha^l for the first primitive n-th root alpha; needs n | q-1.
  static RsCode dft(const Field& field, int n, int k);

  const Field& field() const { return field_; }
  int n() const { return n_; }
  int k() const { return k_; }
  int t() const { return (n_ - k_) / 2; }  // decoding radius
  const std::vector<FieldElement>& betas() const { return betas_; }
  const Polynomial& modulus() const { return m_; }
  bool dft_mode() const { return dft_mode_; }
  // Coefficients of Y below this index never affect the locator.
  int ell_min() const { return (n_ - k_) % 2 == 0 ? k_ : k_ + 1; }

  std::vector<FieldElement> encode(const Polynomial& message) const;

  // Unique Y with deg Y < n interpolating the word at the betas (inverse
  // DFT in dft_mode).
  Polynomial transform_inverse(std::span<const FieldElement> word) const;

  // Monic product of (x - beta_l) over the nonzero positions of the word.
  Polynomial error_locator(std::span<const FieldElement> error) const;

  RsDecodeResult decode(std::span<const FieldElement> received,
                        const SolveOptions& solve_options = {}) const;

  // Y with the below-ell_min coefficients zeroed.
  Polynomial zero_irrelevant(const Polynomial& y_poly) const;

  // Coefficients Y_l for l = ell_min..n-1 (these depend only on the error).
  std::vector<FieldElement> syndromes(std::span<const FieldElement> received) const;

 private:
  RsCode(Field field, int n, int k, std::vector<FieldElement> betas);

  Field field_;
  int n_;
  int k_;
  std::vector<FieldElement> betas_;
  Polynomial m_;
  bool dft_mode_;
  std::vector<code_t> weights_;     // 1 / m'(beta_j), for interpolation
  std::vector<code_t> alpha_pows_;  // dft_mode: alpha^0..alpha^{n-1}
  code_t n_inverse_ = 0;            // dft_mode: 1/n in F
};

// Exact quotient (Y * Lambda mod m) / Lambda, or nullopt when the division
// leaves a remainder. Lambda must be nonzero.
std::optional<Polynomial> recover_codeword_poly(const Polynomial& y_poly,
                                                const Polynomial& lambda,
                                                const Polynomial& modulus);

}  // namespace pinv
