#include "pinv/prc.hpp"

#include <stdexcept>

namespace pinv {

PrcCode::PrcCode(Field field, std::vector<Polynomial> moduli,
                 std::vector<FieldElement> scalars, int k)
    : field_(std::move(field)),
      moduli_(std::move(moduli)),
      scalars_(std::move(scalars)),
      k_(k),
      m_(field_) {
  const int n = static_cast<int>(moduli_.size());
  if (!(0 < k_ && k_ < n)) throw std::invalid_argument("need 0 < k < n");
  for (const Polynomial& mod : moduli_) {
    if (mod.field() != field_) throw std::invalid_argument("modulus over another field");
    if (mod.degree() < 1) throw std::invalid_argument("moduli must have degree >= 1");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (gcd(moduli_[static_cast<std::size_t>(i)], moduli_[static_cast<std::size_t>(j)]).degree() != 0)
        throw std::invalid_argument("moduli must be pairwise coprime");

  Polynomial product = Polynomial::one(field_);
  K_ = 0;
  all_irreducible_ = true;
  for (int l = 0; l < n; ++l) {
    const Polynomial& mod = moduli_[static_cast<std::size_t>(l)];
    product = product * mod;
    if (l < k_) K_ += mod.degree();
    if (!is_irreducible(mod)) all_irreducible_ = false;
  }
  m_ = product;
  N_ = m_.degree();

  // CRT idempotents: e_l = M_l * (M_l^{-1} mod m_l) with M_l = m / m_l
  idempotents_.reserve(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    const Polynomial& mod = moduli_[static_cast<std::size_t>(l)];
    Polynomial cofactor = divmod(m_, mod).first;
    Polynomial reduced = divmod(cofactor, mod).second;
    ModularInverseResult inv = modular_inverse(reduced, mod);
    if (!inv.is_inverse())
      throw std::logic_error("cofactor not invertible despite coprime moduli");
    idempotents_.push_back(divmod(cofactor * inv.lambda, m_).second);
  }
}

PrcCode PrcCode::create(const Field& field, std::vector<Polynomial> moduli, int k) {
  std::vector<FieldElement> scalars;
  scalars.reserve(moduli.size());
  for (Polynomial& mod : moduli) {
    if (mod.is_zero()) throw std::invalid_argument("zero modulus");
    scalars.push_back(mod.lcf());
    mod = mod.monic();
  }
  return PrcCode(field, std::move(moduli), std::move(scalars), k);
}

std::vector<Polynomial> PrcCode::encode(const Polynomial& message) const {
  if (message.field() != field_)
    throw std::invalid_argument("message over another field");
  if (message.degree() >= K_)
    throw std::invalid_argument("message degree must be below K");
  std::vector<Polynomial> residues;
  residues.reserve(moduli_.size());
  for (const Polynomial& mod : moduli_)
    residues.push_back(divmod(message, mod).second);
  return residues;
}

Polynomial PrcCode::crt_inverse(std::span<const Polynomial> residues) const {
  if (residues.size() != moduli_.size())
    throw std::invalid_argument("residue count does not match the moduli");
  Polynomial acc = Polynomial::zero(field_);
  for (std::size_t l = 0; l < residues.size(); ++l) {
    if (residues[l].field() != field_)
      throw std::invalid_argument("residue over another field");
    if (residues[l].degree() >= moduli_[l].degree())
      throw std::invalid_argument("residue degree exceeds its modulus");
    if (residues[l].is_zero()) continue;
    acc = acc + residues[l] * idempotents_[l];
  }
  return divmod(acc, m_).second;
}

Polynomial PrcCode::error_locator(std::span<const Polynomial> error) const {
  if (error.size() != moduli_.size())
    throw std::invalid_argument("word length does not match the moduli");
  Polynomial locator = Polynomial::one(field_);
  for (std::size_t l = 0; l < error.size(); ++l)
    if (!error[l].is_zero()) locator = locator * moduli_[l];
  return locator;
}

PrcDecodeResult PrcCode::decode(std::span<const Polynomial> received,
                                const SolveOptions& solve_options) const {
  Polynomial y_poly = crt_inverse(received);

  if (y_poly.degree() < K_) {
    std::vector<Polynomial> codeword(received.begin(), received.end());
    std::vector<Polynomial> error(moduli_.size(), Polynomial::zero(field_));
    return PrcDecoded{std::move(codeword), std::move(y_poly), std::move(error),
                      Polynomial::one(field_), 0};
  }

  const int d = N_ - t();
  Polynomial lambda = solve(PartialInverseProblem(y_poly, m_, d), solve_options);
  if (lambda.degree() > t()) return DecodeFailure::LocatorDegreeExceeded;

  Polynomial numerator = divmod(y_poly * lambda, m_).second;
  auto [message, division_rem] = divmod(numerator, lambda);
  if (!division_rem.is_zero()) return DecodeFailure::NonExactDivision;
  if (message.degree() >= K_) return DecodeFailure::MessageDegreeExceeded;

  std::vector<Polynomial> codeword = encode(message);
  std::vector<Polynomial> error;
  error.reserve(moduli_.size());
  int weight = 0;
  for (std::size_t l = 0; l < moduli_.size(); ++l) {
    Polynomial e = received[l] - codeword[l];
    if (!e.is_zero()) ++weight;
    error.push_back(std::move(e));
  }
  Polynomial residual_factor = error_factor(crt_inverse(error), m_);
  if (residual_factor.degree() > t()) return DecodeFailure::ResidualWeightExceeded;

  return PrcDecoded{std::move(codeword), std::move(message), std::move(error),
                    std::move(lambda), weight};
}

Polynomial error_factor(const Polynomial& error_transform, const Polynomial& modulus) {
  if (modulus.is_zero()) throw std::invalid_argument("modulus must be nonzero");
  if (error_transform.is_zero()) return Polynomial::one(modulus.field());
  Polynomial g = gcd(error_transform, modulus);
  return divmod(modulus, g).first.monic();
}

}  // namespace pinv
