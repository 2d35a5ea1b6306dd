#include "pinv/rs.hpp"

#include <stdexcept>

namespace pinv {

namespace {

void require_word_length(std::size_t got, int n) {
  if (got != static_cast<std::size_t>(n))
    throw std::invalid_argument("word length does not match the blocklength");
}

}  // namespace

RsCode::RsCode(Field field, int n, int k, std::vector<FieldElement> betas)
    : field_(std::move(field)), n_(n), k_(k), betas_(std::move(betas)), m_(field_) {
  if (!(0 < k_ && k_ < n_)) throw std::invalid_argument("need 0 < k < n");
  if (static_cast<std::uint64_t>(n_) > field_.order())
    throw std::invalid_argument("blocklength exceeds the field size");
  if (betas_.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("need exactly n evaluation points");
  for (std::size_t i = 0; i < betas_.size(); ++i) {
    if (betas_[i].field() != field_)
      throw std::invalid_argument("evaluation point from another field");
    for (std::size_t j = i + 1; j < betas_.size(); ++j)
      if (betas_[i] == betas_[j])
        throw std::invalid_argument("evaluation points must be distinct");
  }

  Polynomial product = Polynomial::one(field_);
  for (const FieldElement& beta : betas_)
    product = product * Polynomial(field_, {field_.neg_code(beta.code()), 1});
  m_ = product;

  // dft_mode iff m collapses to x^n - 1 (the betas are then exactly the
  // n-th roots of unity), which enables the cyclic solver fast path and the
  // inverse-DFT transform.
  dft_mode_ = true;
  if (m_.coeff_code(0) != field_.neg_code(1)) dft_mode_ = false;
  for (int i = 1; dft_mode_ && i < n_; ++i)
    if (m_.coeff_code(i) != 0) dft_mode_ = false;

  weights_.reserve(betas_.size());
  for (const FieldElement& beta : betas_) {
    Polynomial numer =
        divmod(m_, Polynomial(field_, {field_.neg_code(beta.code()), 1})).first;
    weights_.push_back(field_.inv_code(numer.eval_code(beta.code())));
  }

  if (dft_mode_) {
    // betas as given may be any ordering of the roots; the DFT form needs
    // beta_l = alpha^l, so only cache powers when that holds
    const code_t alpha = betas_.size() > 1 ? betas_[1].code() : 1;
    alpha_pows_.resize(static_cast<std::size_t>(n_));
    code_t cur = 1;
    bool geometric = true;
    for (int l = 0; l < n_; ++l) {
      alpha_pows_[static_cast<std::size_t>(l)] = cur;
      if (cur != betas_[static_cast<std::size_t>(l)].code()) geometric = false;
      cur = field_.mul_code(cur, alpha);
    }
    if (geometric) {
      // n as a field element is the prime-subfield constant n mod p,
      // nonzero because n | q-1 forces p to not divide n
      n_inverse_ = field_.inv_code(
          static_cast<code_t>(static_cast<std::uint64_t>(n_) % field_.characteristic()));
    } else {
      alpha_pows_.clear();
    }
  }
}

RsCode RsCode::with_betas(const Field& field, int n, int k,
                          std::vector<FieldElement> betas) {
  return RsCode(field, n, k, std::move(betas));
}

RsCode RsCode::dft(const Field& field, int n, int k) {
  FieldElement alpha = field.find_primitive_nth_root(static_cast<std::uint64_t>(n));
  std::vector<FieldElement> betas;
  betas.reserve(static_cast<std::size_t>(n));
  FieldElement cur = field.one();
  for (int l = 0; l < n; ++l) {
    betas.push_back(cur);
    cur = cur * alpha;
  }
  return RsCode(field, n, k, std::move(betas));
}

std::vector<FieldElement> RsCode::encode(const Polynomial& message) const {
  if (message.field() != field_)
    throw std::invalid_argument("message over another field");
  if (message.degree() >= k_)
    throw std::invalid_argument("message degree must be below k");
  std::vector<FieldElement> word;
  word.reserve(betas_.size());
  for (const FieldElement& beta : betas_)
    word.push_back(FieldElement(field_, message.eval_code(beta.code())));
  return word;
}

Polynomial RsCode::transform_inverse(std::span<const FieldElement> word) const {
  require_word_length(word.size(), n_);
  for (const FieldElement& y : word)
    if (y.field() != field_) throw std::invalid_argument("symbol from another field");

  if (!alpha_pows_.empty()) {
    // inverse DFT: Y_j = n^{-1} * sum_l y_l alpha^{-lj}
    std::vector<code_t> coeffs(static_cast<std::size_t>(n_), 0);
    for (int j = 0; j < n_; ++j) {
      code_t acc = 0;
      for (int l = 0; l < n_; ++l) {
        const code_t y = word[static_cast<std::size_t>(l)].code();
        if (y == 0) continue;
        const int idx = static_cast<int>(
            (static_cast<std::int64_t>(n_) * n_ - static_cast<std::int64_t>(l) * j) %
            n_);
        acc = field_.add_code(acc, field_.mul_code(y, alpha_pows_[static_cast<std::size_t>(idx)]));
      }
      coeffs[static_cast<std::size_t>(j)] = field_.mul_code(acc, n_inverse_);
    }
    return Polynomial(field_, std::move(coeffs));
  }

  // Lagrange: accumulate y_j * w_j * (m / (x - beta_j)), each quotient by
  // synthetic division
  std::vector<code_t> acc(static_cast<std::size_t>(n_), 0);
  std::vector<code_t> quotient(static_cast<std::size_t>(n_), 0);
  for (int j = 0; j < n_; ++j) {
    const code_t y = word[static_cast<std::size_t>(j)].code();
    if (y == 0) continue;
    const code_t beta = betas_[static_cast<std::size_t>(j)].code();
    code_t carry = 0;
    for (int i = n_; i-- > 0;) {
      carry = field_.add_code(m_.coeff_code(i + 1), field_.mul_code(beta, carry));
      quotient[static_cast<std::size_t>(i)] = carry;
    }
    const code_t scale = field_.mul_code(y, weights_[static_cast<std::size_t>(j)]);
    for (int i = 0; i < n_; ++i)
      acc[static_cast<std::size_t>(i)] = field_.add_code(
          acc[static_cast<std::size_t>(i)],
          field_.mul_code(scale, quotient[static_cast<std::size_t>(i)]));
  }
  return Polynomial(field_, std::move(acc));
}

Polynomial RsCode::error_locator(std::span<const FieldElement> error) const {
  require_word_length(error.size(), n_);
  Polynomial locator = Polynomial::one(field_);
  for (int l = 0; l < n_; ++l) {
    if (error[static_cast<std::size_t>(l)].is_zero()) continue;
    locator = locator *
              Polynomial(field_, {field_.neg_code(betas_[static_cast<std::size_t>(l)].code()), 1});
  }
  return locator;
}

Polynomial RsCode::zero_irrelevant(const Polynomial& y_poly) const {
  if (y_poly.degree() >= n_)
    throw std::invalid_argument("transform degree must be below n");
  std::vector<code_t> coeffs = y_poly.codes();
  const int bound = std::min<int>(ell_min(), static_cast<int>(coeffs.size()));
  for (int i = 0; i < bound; ++i) coeffs[static_cast<std::size_t>(i)] = 0;
  return Polynomial(field_, std::move(coeffs));
}

std::vector<FieldElement> RsCode::syndromes(std::span<const FieldElement> received) const {
  Polynomial y_poly = transform_inverse(received);
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(n_ - ell_min()));
  for (int l = ell_min(); l < n_; ++l) out.push_back(y_poly.coeff(l));
  return out;
}

RsDecodeResult RsCode::decode(std::span<const FieldElement> received,
                              const SolveOptions& solve_options) const {
  require_word_length(received.size(), n_);
  Polynomial y_poly = transform_inverse(received);

  // clean word: already a codeword, nothing to solve
  if (y_poly.degree() < k_) {
    std::vector<FieldElement> codeword(received.begin(), received.end());
    std::vector<FieldElement> error(static_cast<std::size_t>(n_), field_.zero());
    return RsDecoded{std::move(codeword), std::move(y_poly), std::move(error),
                     Polynomial::one(field_), 0};
  }

  const int d = (n_ + k_ + 1) / 2;  // = n - t
  Polynomial lambda = solve(PartialInverseProblem(y_poly, m_, d), solve_options);
  if (lambda.degree() > t()) return DecodeFailure::LocatorDegreeExceeded;

  std::optional<Polynomial> message = recover_codeword_poly(y_poly, lambda, m_);
  if (!message) return DecodeFailure::NonExactDivision;
  if (message->degree() >= k_) return DecodeFailure::MessageDegreeExceeded;

  std::vector<FieldElement> codeword = encode(*message);
  std::vector<FieldElement> error;
  error.reserve(static_cast<std::size_t>(n_));
  int weight = 0;
  bool roots_cover_errors = true;
  for (int l = 0; l < n_; ++l) {
    FieldElement e = received[static_cast<std::size_t>(l)] - codeword[static_cast<std::size_t>(l)];
    if (!e.is_zero()) {
      ++weight;
      if (lambda.eval_code(betas_[static_cast<std::size_t>(l)].code()) != 0)
        roots_cover_errors = false;
    }
    error.push_back(e);
  }
  if (weight > t() || !roots_cover_errors)
    return DecodeFailure::ResidualWeightExceeded;

  return RsDecoded{std::move(codeword), std::move(*message), std::move(error),
                   std::move(lambda), weight};
}

std::optional<Polynomial> recover_codeword_poly(const Polynomial& y_poly,
                                                const Polynomial& lambda,
                                                const Polynomial& modulus) {
  if (lambda.is_zero()) throw std::invalid_argument("locator must be nonzero");
  Polynomial numerator = divmod(y_poly * lambda, modulus).second;
  auto [quotient, remainder] = divmod(numerator, lambda);
  if (!remainder.is_zero()) return std::nullopt;
  return quotient;
}

}  // namespace pinv
