#pragma once

#include "pinv/partial_inverse.hpp"
#include "pinv/poly.hpp"

namespace pinv {

enum class OracleMethod { LinearSystem, Euclid };

struct OracleReport {
  int minimal_degree;
  Polynomial witness;  // monic
  OracleMethod method;
};

// Definitional reference: for tau = 0, 1, ... build the linear system that
// forces coefficients d..deg(m)-1 of b*Lambda mod m to zero and return the
// first tau admitting a nonzero solution. Exhaustive and slow by design;
// guards against deg m > 24.
OracleReport linear_system_minimal(const PartialInverseProblem& problem);

// Extended Euclidean remainder sequence on (m, b), keeping the b-cofactor;
// stops at the first remainder of degree < d.
OracleReport euclid_partial_inverse(const PartialInverseProblem& problem);

}  // namespace pinv
