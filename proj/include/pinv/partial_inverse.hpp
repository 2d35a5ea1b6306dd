#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "pinv/poly.hpp"

namespace pinv {

// Find the nonzero Lambda of smallest degree with
// deg(b * Lambda mod m) < d. Requires b != 0, m != 0, deg b < deg m and
// 1 <= d <= deg m. The monic solution is unique.
struct PartialInverseProblem {
  Polynomial b;
  Polynomial m;
  int d;

  PartialInverseProblem(Polynomial b_in, Polynomial m_in, int d_in);
};

// How much self-checking the solver performs while it runs. Structural
// checks are cheap degree/lead comparisons and stay on by default; Full
// additionally recomputes b*Lambda mod m from scratch at every step and
// compares it with the tracked remainder. Violations throw std::logic_error.
enum class CheckLevel { None, Structural, Full };

// Program points at which the solver state invariants are asserted. An
// observer registered in SolveOptions sees a snapshot at each of them; tests
// hook in here to verify minimality against the oracles.
enum class SolveCheckpoint { LoopHead, AfterUpdate, BeforeReturn, RepeatExit };

struct SolverSnapshot {
  Polynomial lambda1;
  Polynomial lambda2;
  // Tracked remainders b*Lambda_i mod m; absent on the m = x^nu and
  // m = x^n - 1 fast paths, which never materialize them. r1 starts out as
  // m itself (it stands for 0 = b*0 mod m and seeds the first cancellation).
  std::optional<Polynomial> r1;
  std::optional<Polynomial> r2;
  int d1;
  int d2;
  FieldElement kappa1;
  FieldElement kappa2;
};

using SolveObserver = std::function<void(SolveCheckpoint, const SolverSnapshot&)>;

struct SolveOptions {
  bool force_generic = false;
  CheckLevel checks = CheckLevel::Structural;
  SolveObserver observer;
};

// Monic minimal solution; deterministic.
Polynomial solve(const PartialInverseProblem& problem, const SolveOptions& options = {});

// Same, plus the remainder b * Lambda mod m for the returned monic Lambda.
std::pair<Polynomial, Polynomial> solve_with_remainder(const PartialInverseProblem& problem,
                                                       const SolveOptions& options = {});

// Outcome of inverting b in F[x]/m(x): either b * lambda = 1 mod m, or b is
// a zero divisor and lambda = m / gcd(b, m) with b * lambda = 0 mod m.
struct ModularInverseResult {
  enum class Kind { Inverse, ZeroDivisor };
  Kind kind;
  Polynomial lambda;

  bool is_inverse() const { return kind == Kind::Inverse; }
};

// Requires b != 0 and deg b < deg m.
ModularInverseResult modular_inverse(const Polynomial& b, const Polynomial& m,
                                     const SolveOptions& options = {});

struct KeyEquationSolution {
  Polynomial lambda;  // monic, deg <= (n-k)/2
  Polynomial gamma;   // S * lambda mod x^(n-k)
};

// Classical key equation S*Lambda = Gamma mod x^(n-k): solved with b = S,
// m = x^(n-k), d = ceil((n-k)/2). Requires 0 < k < n and deg S < n-k;
// S = 0 yields (1, 0).
KeyEquationSolution solve_standard_key_equation(const Polynomial& syndrome, int n, int k,
                                                const SolveOptions& options = {});

// Thresholds below which coefficients cannot affect the solution: b
// coefficients with index < first, m coefficients with index < second.
// Requires 1 <= d <= m_degree.
std::pair<int, int> irrelevant_bounds(int m_degree, int d);

}  // namespace pinv
