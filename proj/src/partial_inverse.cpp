#include "pinv/partial_inverse.hpp"

#include <sstream>
#include <stdexcept>

namespace pinv {

namespace {

enum class Path { Generic, PowerOfX, Cyclic };

bool is_power_of_x(const Polynomial& m) {
  const int deg = m.degree();
  if (deg < 1 || m.codes().back() != 1) return false;
  for (int i = 0; i < deg; ++i)
    if (m.coeff_code(i) != 0) return false;
  return true;
}

bool is_x_pow_n_minus_1(const Polynomial& m) {
  const int deg = m.degree();
  if (deg < 1 || m.codes().back() != 1) return false;
  if (m.coeff_code(0) != m.field().neg_code(1)) return false;
  for (int i = 1; i < deg; ++i)
    if (m.coeff_code(i) != 0) return false;
  return true;
}

[[noreturn]] void invariant_failure(const char* which, const char* detail) {
  std::ostringstream os;
  os << "solver invariant " << which << " violated: " << detail;
  throw std::logic_error(os.str());
}

struct RawSolution {
  Polynomial lambda;                  // nonzero, not yet monic
  std::optional<Polynomial> remainder;  // tracked b*lambda mod m (generic path)
};

// The loop state of the solver. Lambda updates and remainder updates share
// the same recurrence (two-wrongs-make-a-right): the new first-track value
// is kappa2 * v1 - kappa1 * x^(d1-d2) * v2, which cancels the leading term
// of the tracked remainder.
class Solver {
 public:
  Solver(const PartialInverseProblem& problem, const SolveOptions& options, Path path)
      : b_(problem.b),
        m_(problem.m),
        d_(problem.d),
        options_(options),
        path_(path),
        lambda1_(Polynomial::zero(b_.field())),
        lambda2_(Polynomial::one(b_.field())),
        d1_(m_.degree()),
        d2_(b_.degree()),
        kappa1_(m_.lcf().code()),
        kappa2_(b_.lcf().code()),
        cyclic_n_(m_.degree()) {
    if (path_ == Path::Generic) {
      r1_ = m_;  // stands for b*0 mod m = 0; seeds the first cancellation
      r2_ = b_;
    }
  }

  RawSolution run() {
    while (true) {
      checkpoint_loop_head();
      // inner repeat: update Lambda1 until its remainder degree drops
      // below d2 (swap) or below d (return)
      while (true) {
        const int shift = d1_ - d2_;
        const int old_d1 = d1_;
        Polynomial updated =
            lambda1_.scalar_mul_code(kappa2_) - lambda2_.scalar_mul_code(kappa1_).shift(shift);
        lambda1_ = std::move(updated);
        if (path_ == Path::Generic)
          r1_ = r1_->scalar_mul_code(kappa2_) - r2_->scalar_mul_code(kappa1_).shift(shift);
        checkpoint_after_update(old_d1);

        if (path_ == Path::Generic) {
          d1_ = r1_->degree();
          if (d1_ < d_) return finish();
          kappa1_ = r1_->lcf().code();
        } else {
          // scan the (implicit) remainder downward for its next nonzero
          // coefficient; each probe is one convolution tap
          while (true) {
            --d1_;
            if (d1_ < d_) return finish();
            kappa1_ = remainder_coeff(d1_);
            if (kappa1_ != 0) break;
          }
        }
        if (d1_ < d2_) break;
      }
      checkpoint_repeat_exit();
      std::swap(lambda1_, lambda2_);
      std::swap(r1_, r2_);
      std::swap(d1_, d2_);
      std::swap(kappa1_, kappa2_);
    }
  }

 private:
  // Coefficient of x^l in b * Lambda1 mod m for the two closed-form moduli.
  // For m = x^nu that is a straight convolution tap (absent coefficients of
  // b read as zero); for m = x^n - 1 the index wraps cyclically.
  code_t remainder_coeff(int l) const {
    const Field& f = b_.field();
    code_t acc = 0;
    const auto& lam = lambda1_.codes();
    for (int i = 0; i < static_cast<int>(lam.size()); ++i) {
      if (lam[static_cast<std::size_t>(i)] == 0) continue;
      int idx = l - i;
      if (path_ == Path::Cyclic) idx = ((idx % cyclic_n_) + cyclic_n_) % cyclic_n_;
      const code_t bc = b_.coeff_code(idx);
      if (bc == 0) continue;
      acc = f.add_code(acc, f.mul_code(bc, lam[static_cast<std::size_t>(i)]));
    }
    return acc;
  }

  RawSolution finish() {
    if (options_.observer) observe(SolveCheckpoint::BeforeReturn);
    if (lambda1_.is_zero()) invariant_failure("output", "returned Lambda is zero");
    return {lambda1_, path_ == Path::Generic ? r1_ : std::nullopt};
  }

  void checkpoint_loop_head() {
    if (options_.checks != CheckLevel::None) {
      if (!(d1_ > d2_ && d2_ >= d_))
        invariant_failure("A.1", "d1 > d2 >= d does not hold at loop head");
      if (lambda2_.degree() != m_.degree() - d1_)
        invariant_failure("A.2", "deg Lambda2 != deg m - d1");
      if (!(lambda2_.degree() > lambda1_.degree()))
        invariant_failure("A.3", "deg Lambda2 <= deg Lambda1");
      check_tracked_state();
    }
    if (options_.observer) observe(SolveCheckpoint::LoopHead);
  }

  void checkpoint_after_update(int old_d1) {
    if (options_.checks != CheckLevel::None) {
      if (lambda1_.degree() != m_.degree() - d2_)
        invariant_failure("A.6", "deg Lambda1 != deg m - d2 after update");
      if (!(lambda1_.degree() > lambda2_.degree()))
        invariant_failure("A.7", "deg Lambda1 <= deg Lambda2 after update");
      if (path_ == Path::Generic && !(r1_->degree() < old_d1))
        invariant_failure("A.5", "tracked remainder degree did not drop");
    }
    if (options_.checks == CheckLevel::Full) {
      const Polynomial true_rem = divmod(b_ * lambda1_, m_).second;
      if (!(true_rem.degree() < old_d1))
        invariant_failure("A.5", "deg(b*Lambda1 mod m) >= old d1");
      if (path_ == Path::Generic && !(true_rem == *r1_))
        invariant_failure("A.10", "tracked remainder differs from b*Lambda1 mod m");
    }
    if (options_.observer) observe(SolveCheckpoint::AfterUpdate);
  }

  void checkpoint_repeat_exit() {
    if (options_.observer) observe(SolveCheckpoint::RepeatExit);
  }

  void check_tracked_state() {
    if (path_ != Path::Generic) return;
    if (r1_->degree() != d1_ || r1_->lcf().code() != kappa1_)
      invariant_failure("A.10", "(d1, kappa1) out of sync with tracked r1");
    if (r2_->degree() != d2_ || r2_->lcf().code() != kappa2_)
      invariant_failure("A.10", "(d2, kappa2) out of sync with tracked r2");
    if (options_.checks == CheckLevel::Full) {
      if (!(divmod(b_ * lambda2_, m_).second == *r2_))
        invariant_failure("A.10", "tracked r2 differs from b*Lambda2 mod m");
    }
  }

  void observe(SolveCheckpoint point) {
    const Field& f = b_.field();
    SolverSnapshot snap{lambda1_, lambda2_,        r1_,
                        r2_,      d1_,             d2_,
                        FieldElement(f, kappa1_),  FieldElement(f, kappa2_)};
    options_.observer(point, snap);
  }

  const Polynomial& b_;
  const Polynomial& m_;
  const int d_;
  const SolveOptions& options_;
  const Path path_;

  Polynomial lambda1_;
  Polynomial lambda2_;
  std::optional<Polynomial> r1_;
  std::optional<Polynomial> r2_;
  int d1_;
  int d2_;
  code_t kappa1_;
  code_t kappa2_;
  const int cyclic_n_;
};

RawSolution solve_raw(const PartialInverseProblem& problem, const SolveOptions& options) {
  if (problem.b.degree() < problem.d)
    return {Polynomial::one(problem.b.field()), problem.b};
  Path path = Path::Generic;
  if (!options.force_generic) {
    if (is_power_of_x(problem.m))
      path = Path::PowerOfX;
    else if (is_x_pow_n_minus_1(problem.m))
      path = Path::Cyclic;
  }
  return Solver(problem, options, path).run();
}

}  // namespace

PartialInverseProblem::PartialInverseProblem(Polynomial b_in, Polynomial m_in, int d_in)
    : b(std::move(b_in)), m(std::move(m_in)), d(d_in) {
  if (b.field() != m.field())
    throw std::invalid_argument("b and m over mismatched fields");
  if (b.is_zero()) throw std::invalid_argument("b must be nonzero");
  if (m.is_zero()) throw std::invalid_argument("m must be nonzero");
  if (!(b.degree() < m.degree()))
    throw std::invalid_argument("deg b must be smaller than deg m");
  if (!(1 <= d && d <= m.degree()))
    throw std::invalid_argument("d must satisfy 1 <= d <= deg m");
}

Polynomial solve(const PartialInverseProblem& problem, const SolveOptions& options) {
  return solve_raw(problem, options).lambda.monic();
}

std::pair<Polynomial, Polynomial> solve_with_remainder(const PartialInverseProblem& problem,
                                                       const SolveOptions& options) {
  RawSolution raw = solve_raw(problem, options);
  const Field& f = problem.b.field();
  const code_t scale = f.inv_code(raw.lambda.lcf().code());
  Polynomial lambda = raw.lambda.scalar_mul_code(scale);
  Polynomial remainder = raw.remainder
                             ? raw.remainder->scalar_mul_code(scale)
                             : divmod(problem.b * lambda, problem.m).second;
  if (options.checks == CheckLevel::Full &&
      !(divmod(problem.b * lambda, problem.m).second == remainder))
    throw std::logic_error("tracked remainder differs from b*Lambda mod m at return");
  if (options.checks != CheckLevel::None && !(remainder.degree() < problem.d))
    throw std::logic_error("solution remainder does not satisfy the degree bound");
  return {std::move(lambda), std::move(remainder)};
}

ModularInverseResult modular_inverse(const Polynomial& b, const Polynomial& m,
                                     const SolveOptions& options) {
  auto [lambda, remainder] = solve_with_remainder(PartialInverseProblem(b, m, 1), options);
  if (remainder.is_zero())
    return {ModularInverseResult::Kind::ZeroDivisor, std::move(lambda)};
  // remainder is a nonzero constant; rescale so that b * lambda = 1 mod m
  return {ModularInverseResult::Kind::Inverse,
          lambda.scalar_mul(remainder.lcf().inv())};
}

KeyEquationSolution solve_standard_key_equation(const Polynomial& syndrome, int n, int k,
                                                const SolveOptions& options) {
  if (!(0 < k && k < n)) throw std::invalid_argument("need 0 < k < n");
  const Field& f = syndrome.field();
  const int nk = n - k;
  if (syndrome.degree() >= nk)
    throw std::invalid_argument("syndrome degree must be below n-k");
  if (syndrome.is_zero())
    return {Polynomial::one(f), Polynomial::zero(f)};
  const Polynomial m = Polynomial::monomial(f, nk);
  const int d = (nk + 1) / 2;
  Polynomial lambda = solve(PartialInverseProblem(syndrome, m, d), options);
  Polynomial gamma = divmod(syndrome * lambda, m).second;
  return {std::move(lambda), std::move(gamma)};
}

std::pair<int, int> irrelevant_bounds(int m_degree, int d) {
  if (!(1 <= d && d <= m_degree))
    throw std::invalid_argument("d must satisfy 1 <= d <= deg m");
  return {2 * d - m_degree, 2 * d - m_degree + 1};
}

}  // namespace pinv
