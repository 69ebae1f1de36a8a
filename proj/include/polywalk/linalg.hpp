#ifndef POLYWALK_LINALG_HPP
#define POLYWALK_LINALG_HPP

#include <optional>
#include <vector>

#include "polywalk/rational.hpp"

namespace polywalk {

std::size_t rank(const Mat& m);

// Basis of the null space, each vector scaled to coprime integer entries with
// the first nonzero entry positive. Empty when rank = ncols.
std::vector<Vec> kernel_basis(const Mat& m);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };
struct LinSolve {
  SolveStatus status;
  Vec x;  // valid when status == Unique
};
// Exact solve of m x = rhs (m need not be square).
LinSolve solve(const Mat& m, const Vec& rhs);

// Unique exact solution, or nullopt when det(m) = 0 (the Singular marker).
std::optional<Vec> solve_square(const Mat& m, const Vec& rhs);

Rat determinant(const Mat& m);

// Delta(M): max |det(S)| over all square submatrices S, by exhaustive
// enumeration. Desk-scale guard: <= 12 columns and <= 24 rows.
Rat max_abs_subdeterminant(const Mat& m);

struct TUReport {
  bool tu = false;
  // On failure, a witnessing submatrix (original row/column indices).
  std::vector<std::size_t> witness_rows;
  std::vector<std::size_t> witness_cols;
};
TUReport is_totally_unimodular(const Mat& m);

// Rank of the affine hull of the given points (dimension of their span).
std::size_t affine_rank(const std::vector<Vec>& points);

// Precomputed small-integer row view for hot row-subset enumeration loops.
// Falls back to exact rational elimination per subset on overflow.
class IntRowView {
public:
  static std::optional<IntRowView> make(const Mat& m);
  std::size_t ncols() const { return ncols_; }
  // Kernel generator of the selected rows when the nullity is exactly 1
  // (canonical direction), nullopt otherwise.
  std::optional<Vec> kernel_if_line(const std::vector<std::size_t>& rows) const;

private:
  std::vector<std::vector<long long>> rows_;
  std::size_t ncols_ = 0;
};

// Floating-point binomial coefficient, for size guards only.
double binom_estimate(std::size_t n, std::size_t k);

}  // namespace polywalk

#endif
