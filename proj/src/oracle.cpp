#include "pinv/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace pinv {

namespace {

// Kernel vector of the system rows x cols over F, or empty if the kernel is
// trivial. Deterministic: plain column-order elimination, first nonzero
// pivot, free variable set to one.
std::vector<code_t> kernel_vector(const Field& f, std::vector<std::vector<code_t>> a,
                                  int rows, int cols) {
  std::vector<int> pivot_row_of_col(static_cast<std::size_t>(cols), -1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
    auto& prow = a[static_cast<std::size_t>(rank)];
    const code_t inv = f.inv_code(prow[static_cast<std::size_t>(col)]);
    for (int c = col; c < cols; ++c)
      prow[static_cast<std::size_t>(c)] = f.mul_code(prow[static_cast<std::size_t>(c)], inv);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const code_t factor = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (int c = col; c < cols; ++c) {
        auto& cell = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        cell = f.sub_code(cell, f.mul_code(factor, prow[static_cast<std::size_t>(c)]));
      }
    }
    pivot_row_of_col[static_cast<std::size_t>(col)] = rank;
    ++rank;
  }

  int free_col = -1;
  for (int col = 0; col < cols; ++col) {
    if (pivot_row_of_col[static_cast<std::size_t>(col)] < 0) {
      free_col = col;
      break;
    }
  }
  if (free_col < 0) return {};

  std::vector<code_t> v(static_cast<std::size_t>(cols), 0);
  v[static_cast<std::size_t>(free_col)] = 1;
  for (int col = 0; col < cols; ++col) {
    const int pr = pivot_row_of_col[static_cast<std::size_t>(col)];
    if (pr >= 0)
      v[static_cast<std::size_t>(col)] =
          f.neg_code(a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(free_col)]);
  }
  return v;
}

}  // namespace

OracleReport linear_system_minimal(const PartialInverseProblem& problem) {
  const int m_deg = problem.m.degree();
  if (m_deg > 24) throw std::invalid_argument("linear-system oracle limited to deg m <= 24");
  const Field& f = problem.b.field();
  const int rows = m_deg - problem.d;  // constraints on coefficients d..deg(m)-1
  const int max_tau = m_deg - problem.d;

  // columns[j] = b * x^j mod m, built by shift-and-reduce
  std::vector<Polynomial> columns;
  columns.reserve(static_cast<std::size_t>(max_tau) + 1);
  Polynomial cur = problem.b;
  for (int j = 0; j <= max_tau; ++j) {
    columns.push_back(cur);
    cur = divmod(cur.shift(1), problem.m).second;
  }

  for (int tau = 0; tau <= max_tau; ++tau) {
    const int cols = tau + 1;
    std::vector<std::vector<code_t>> a(static_cast<std::size_t>(rows),
                                       std::vector<code_t>(static_cast<std::size_t>(cols), 0));
    for (int r = 0; r < rows; ++r)
      for (int j = 0; j < cols; ++j)
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
            columns[static_cast<std::size_t>(j)].coeff_code(problem.d + r);
    std::vector<code_t> v = kernel_vector(f, std::move(a), rows, cols);
    if (v.empty()) continue;
    Polynomial witness = Polynomial(f, std::move(v)).monic();
    return {witness.degree(), std::move(witness), OracleMethod::LinearSystem};
  }
  throw std::logic_error("no solution up to deg m - d");  // unreachable by Remark 3
}

OracleReport euclid_partial_inverse(const PartialInverseProblem& problem) {
  const Field& f = problem.b.field();
  Polynomial r_prev = problem.m;
  Polynomial r_cur = problem.b;
  Polynomial u_prev = Polynomial::zero(f);  // cofactor of b in r_prev
  Polynomial u_cur = Polynomial::one(f);
  while (r_cur.degree() >= problem.d) {
    auto [q, r_next] = divmod(r_prev, r_cur);
    Polynomial u_next = u_prev - q * u_cur;
    r_prev = std::move(r_cur);
    r_cur = std::move(r_next);
    u_prev = std::move(u_cur);
    u_cur = std::move(u_next);
  }
  Polynomial witness = u_cur.monic();
  return {witness.degree(), std::move(witness), OracleMethod::Euclid};
}

}  // namespace pinv
