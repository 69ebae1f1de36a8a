#include "polywalk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "polywalk/errors.hpp"

namespace polywalk {
namespace {

constexpr long long kI64Limit = (1LL << 62);
constexpr long long kEntryLimit = (1LL << 30);

// Small-integer view of a matrix, used for the fraction-free fast paths.
std::optional<std::vector<std::vector<long long>>> as_small_int(const Mat& m) {
  std::vector<std::vector<long long>> out(m.nrows(), std::vector<long long>(m.ncols()));
  for (std::size_t i = 0; i < m.nrows(); ++i)
    for (std::size_t j = 0; j < m.ncols(); ++j) {
      const Rat& x = m.at(i, j);
      if (!is_integer(x)) return std::nullopt;
      Int n = num(x);
      if (n > kEntryLimit || n < -kEntryLimit) return std::nullopt;
      out[i][j] = static_cast<long long>(n);
    }
  return out;
}

struct EchelonI64 {
  std::vector<std::vector<long long>> rows;  // row echelon, fraction-free
  std::vector<std::size_t> pivot_cols;       // pivot column of row r
};

// Bareiss fraction-free elimination. Returns nullopt on overflow risk.
std::optional<EchelonI64> echelon_i64(std::vector<std::vector<long long>> a) {
  EchelonI64 e;
  if (a.empty()) return e;
  std::size_t rows = a.size(), cols = a[0].size();
  long long prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        __int128 t = (__int128)a[i][j] * a[r][c] - (__int128)a[i][c] * a[r][j];
        __int128 q = t / prev;  // exact by Bareiss
        if (q > kI64Limit || q < -kI64Limit) return std::nullopt;
        a[i][j] = (long long)q;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  a.resize(e.pivot_cols.size());
  e.rows = std::move(a);
  return e;
}

std::optional<EchelonI64> echelon_i64(const Mat& m) {
  auto small = as_small_int(m);
  if (!small) return std::nullopt;
  return echelon_i64(std::move(*small));
}

struct Rref {
  Mat m;
  std::vector<std::size_t> pivot_cols;
};

Rref rref_rat(Mat a) {
  Rref out;
  std::size_t rows = a.nrows(), cols = a.ncols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a.row(r), a.row(piv));
    Rat p = a.at(r, c);
    for (std::size_t j = c; j < cols; ++j) a.at(r, j) /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (std::size_t j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.m = std::move(a);
  return out;
}

// Back-substitution through an (unreduced) integer echelon form for one
// kernel vector with free column f set to 1.
Vec kernel_vector_i64(const EchelonI64& e, std::size_t cols, std::size_t f) {
  Vec x(cols, Rat(0));
  x[f] = 1;
  for (std::size_t ri = e.rows.size(); ri-- > 0;) {
    std::size_t pc = e.pivot_cols[ri];
    Rat s(0);
    for (std::size_t j = pc + 1; j < cols; ++j)
      if (x[j] != 0 && e.rows[ri][j] != 0) s += Rat(e.rows[ri][j]) * x[j];
    x[pc] = -s / Rat(e.rows[ri][pc]);
  }
  return x;
}

Rat det_rat(Mat a) {
  std::size_t n = a.nrows();
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a.at(piv, c) == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != c) {
      std::swap(a.row(c), a.row(piv));
      det = -det;
    }
    det *= a.at(c, c);
    Rat p = a.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a.at(i, c) == 0) continue;
      Rat f = a.at(i, c) / p;
      for (std::size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return det;
}

// Bareiss determinant over machine ints; nullopt on overflow risk.
std::optional<long long> det_i64(std::vector<std::vector<long long>> a) {
  std::size_t n = a.size();
  long long prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[c], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        __int128 t = (__int128)a[i][j] * a[c][c] - (__int128)a[i][c] * a[c][j];
        __int128 q = t / prev;
        if (q > kI64Limit || q < -kI64Limit) return std::nullopt;
        a[i][j] = (long long)q;
      }
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  return sign * (n ? a[n - 1][n - 1] : 1);
}

Int det_cppint(std::vector<std::vector<Int>> a) {
  std::size_t n = a.size();
  Int prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[c], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  return sign * (n ? a[n - 1][n - 1] : Int(1));
}

// ---- submatrix enumeration machinery -------------------------------------

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// A matrix reduced for subdeterminant purposes, with maps back to the
// original row/column indices. Removing zero lines, +-1 unit lines, and
// duplicate (up to sign) lines changes neither total unimodularity nor
// max |subdet| (beyond the trivial value 1 contributed by a unit line).
struct Core {
  std::vector<std::vector<Rat>> a;
  std::vector<std::size_t> row_ids, col_ids;
  bool removed_unit = false;  // Delta >= 1 held by a removed unit line
};

Core reduce_core(const Mat& m) {
  Core c;
  c.a.resize(m.nrows());
  for (std::size_t i = 0; i < m.nrows(); ++i) c.a[i] = m.row(i);
  c.row_ids.resize(m.nrows());
  std::iota(c.row_ids.begin(), c.row_ids.end(), 0);
  c.col_ids.resize(m.ncols());
  std::iota(c.col_ids.begin(), c.col_ids.end(), 0);

  auto erase_row = [&](std::size_t i) {
    c.a.erase(c.a.begin() + i);
    c.row_ids.erase(c.row_ids.begin() + i);
  };
  auto erase_col = [&](std::size_t j) {
    for (auto& r : c.a) r.erase(r.begin() + j);
    c.col_ids.erase(c.col_ids.begin() + j);
  };

  bool changed = true;
  while (changed && !c.a.empty() && !c.a[0].empty()) {
    changed = false;
    // zero / unit rows
    for (std::size_t i = 0; i < c.a.size(); ++i) {
      std::size_t nz = 0;
      bool unit_val = true;
      for (const auto& x : c.a[i])
        if (x != 0) {
          ++nz;
          if (x != 1 && x != -1) unit_val = false;
        }
      if (nz == 0 || (nz == 1 && unit_val)) {
        if (nz == 1) c.removed_unit = true;
        erase_row(i);
        changed = true;
        break;
      }
    }
    if (changed || c.a.empty() || c.a[0].empty()) continue;
    // zero / unit columns
    for (std::size_t j = 0; j < c.a[0].size(); ++j) {
      std::size_t nz = 0;
      bool unit_val = true;
      for (const auto& r : c.a)
        if (r[j] != 0) {
          ++nz;
          if (r[j] != 1 && r[j] != -1) unit_val = false;
        }
      if (nz == 0 || (nz == 1 && unit_val)) {
        if (nz == 1) c.removed_unit = true;
        erase_col(j);
        changed = true;
        break;
      }
    }
    if (changed || c.a.empty() || c.a[0].empty()) continue;
    // duplicate rows up to sign
    for (std::size_t i = 0; i < c.a.size() && !changed; ++i)
      for (std::size_t i2 = i + 1; i2 < c.a.size(); ++i2) {
        bool same = true, neg = true;
        for (std::size_t j = 0; j < c.a[0].size(); ++j) {
          if (c.a[i][j] != c.a[i2][j]) same = false;
          if (c.a[i][j] != -c.a[i2][j]) neg = false;
        }
        if (same || neg) {
          erase_row(i2);
          changed = true;
          break;
        }
      }
    if (changed) continue;
    // duplicate columns up to sign
    for (std::size_t j = 0; j < c.a[0].size() && !changed; ++j)
      for (std::size_t j2 = j + 1; j2 < c.a[0].size(); ++j2) {
        bool same = true, neg = true;
        for (std::size_t i = 0; i < c.a.size(); ++i) {
          if (c.a[i][j] != c.a[i][j2]) same = false;
          if (c.a[i][j] != -c.a[i][j2]) neg = false;
        }
        if (same || neg) {
          erase_col(j2);
          changed = true;
          break;
        }
      }
  }
  return c;
}

double enumeration_work(std::size_t r, std::size_t c) {
  double total = 0;
  for (std::size_t k = 1; k <= std::min(r, c); ++k)
    total += binom_estimate(r, k) * binom_estimate(c, k);
  return total;
}

Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

Rat submatrix_det(const Core& core, const std::vector<std::size_t>& ri,
                  const std::vector<std::size_t>& ci, bool small_int) {
  std::size_t k = ri.size();
  if (small_int) {
    std::vector<std::vector<long long>> s(k, std::vector<long long>(k));
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const Rat& x = core.a[ri[i]][ci[j]];
        Int n = num(x);
        if (!is_integer(x) || n > kEntryLimit || n < -kEntryLimit) {
          ok = false;
          break;
        }
        s[i][j] = (long long)n;
      }
    if (ok) {
      auto d = det_i64(s);
      if (d) return Rat(*d);
      std::vector<std::vector<Int>> big(k, std::vector<Int>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) big[i][j] = s[i][j];
      return Rat(det_cppint(std::move(big)));
    }
  }
  Mat sub(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = core.a[ri[i]][ci[j]];
  return det_rat(std::move(sub));
}

}  // namespace

double binom_estimate(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * double(n - i) / double(i + 1);
  return r;
}

std::size_t rank(const Mat& m) {
  if (m.nrows() == 0 || m.ncols() == 0) return 0;
  if (auto e = echelon_i64(m)) return e->pivot_cols.size();
  return rref_rat(m).pivot_cols.size();
}

std::vector<Vec> kernel_basis(const Mat& m) {
  std::size_t cols = m.ncols();
  std::vector<Vec> out;
  if (cols == 0) return out;
  std::vector<std::size_t> pivots;
  std::optional<EchelonI64> e = echelon_i64(m);
  Rref rr;
  if (e)
    pivots = e->pivot_cols;
  else {
    rr = rref_rat(m);
    pivots = rr.pivot_cols;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec x;
    if (e)
      x = kernel_vector_i64(*e, cols, f);
    else {
      x.assign(cols, Rat(0));
      x[f] = 1;
      for (std::size_t ri = 0; ri < pivots.size(); ++ri) x[pivots[ri]] = -rr.m.at(ri, f);
    }
    out.push_back(canonical_direction(x));
  }
  return out;
}

LinSolve solve(const Mat& m, const Vec& rhs) {
  std::size_t cols = m.ncols();
  Mat aug(m.nrows(), cols + 1);
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, cols) = rhs[i];
  }
  Rref rr = rref_rat(std::move(aug));
  for (auto p : rr.pivot_cols)
    if (p == cols) return {SolveStatus::Inconsistent, {}};
  // particular solution with free variables at zero
  Vec x(cols, Rat(0));
  for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r) x[rr.pivot_cols[r]] = rr.m.at(r, cols);
  SolveStatus st = rr.pivot_cols.size() == cols ? SolveStatus::Unique : SolveStatus::Underdetermined;
  return {st, std::move(x)};
}

std::optional<Vec> solve_square(const Mat& m, const Vec& rhs) {
  if (m.nrows() != m.ncols()) throw invalid("ShapeMismatch", "solve_square needs a square matrix");
  LinSolve s = solve(m, rhs);
  if (s.status != SolveStatus::Unique) return std::nullopt;
  return s.x;
}

Rat determinant(const Mat& m) {
  if (m.nrows() != m.ncols()) throw invalid("ShapeMismatch", "determinant needs a square matrix");
  if (auto small = as_small_int(m)) {
    if (auto d = det_i64(*small)) return Rat(*d);
    std::vector<std::vector<Int>> big(m.nrows(), std::vector<Int>(m.ncols()));
    for (std::size_t i = 0; i < m.nrows(); ++i)
      for (std::size_t j = 0; j < m.ncols(); ++j) big[i][j] = (*small)[i][j];
    return Rat(det_cppint(std::move(big)));
  }
  return det_rat(m);
}

Rat max_abs_subdeterminant(const Mat& m) {
  if (m.ncols() > 12 || m.nrows() > 24)
    throw unsupported("SizeLimitExceeded", "max_abs_subdeterminant guard: <= 12 columns, <= 24 rows");
  Core core = reduce_core(m);
  Rat best(0);
  for (std::size_t i = 0; i < m.nrows(); ++i)
    for (std::size_t j = 0; j < m.ncols(); ++j) best = std::max(best, abs_rat(m.at(i, j)), [](const Rat& a, const Rat& b) { return a < b; });
  if (core.a.empty() || core.a[0].empty()) return best;
  std::size_t r = core.a.size(), c = core.a[0].size();
  bool small_int = true;
  for (const auto& row : core.a)
    for (const auto& x : row)
      if (!is_integer(x) || num(x) > kEntryLimit || num(x) < -kEntryLimit) small_int = false;
  for (std::size_t k = 2; k <= std::min(r, c); ++k) {
    std::vector<std::size_t> ri(k);
    std::iota(ri.begin(), ri.end(), 0);
    do {
      std::vector<std::size_t> ci(k);
      std::iota(ci.begin(), ci.end(), 0);
      do {
        Rat d = abs_rat(submatrix_det(core, ri, ci, small_int));
        if (d > best) best = d;
      } while (next_combination(ci, c));
    } while (next_combination(ri, r));
  }
  return best;
}

TUReport is_totally_unimodular(const Mat& m) {
  TUReport rep;
  // entry pre-check doubles as the 1x1 case
  for (std::size_t i = 0; i < m.nrows(); ++i)
    for (std::size_t j = 0; j < m.ncols(); ++j) {
      const Rat& x = m.at(i, j);
      if (x != 0 && x != 1 && x != -1) {
        rep.tu = false;
        rep.witness_rows = {i};
        rep.witness_cols = {j};
        return rep;
      }
    }
  Core core = reduce_core(m);
  if (core.a.empty() || core.a[0].empty()) {
    rep.tu = true;
    return rep;
  }
  std::size_t r = core.a.size(), c = core.a[0].size();
  if (enumeration_work(r, c) > 4e6)
    throw unsupported("SizeLimitExceeded", "TU check too large after reduction");
  for (std::size_t k = 2; k <= std::min(r, c); ++k) {
    std::vector<std::size_t> ri(k);
    std::iota(ri.begin(), ri.end(), 0);
    do {
      std::vector<std::size_t> ci(k);
      std::iota(ci.begin(), ci.end(), 0);
      do {
        Rat d = submatrix_det(core, ri, ci, true);
        if (d > 1 || d < -1) {
          rep.tu = false;
          for (auto i : ri) rep.witness_rows.push_back(core.row_ids[i]);
          for (auto j : ci) rep.witness_cols.push_back(core.col_ids[j]);
          return rep;
        }
      } while (next_combination(ci, c));
    } while (next_combination(ri, r));
  }
  rep.tu = true;
  return rep;
}

std::optional<IntRowView> IntRowView::make(const Mat& m) {
  auto small = as_small_int(m);
  if (!small) return std::nullopt;
  IntRowView v;
  v.rows_ = std::move(*small);
  v.ncols_ = m.ncols();
  return v;
}

std::optional<Vec> IntRowView::kernel_if_line(const std::vector<std::size_t>& rows) const {
  std::vector<std::vector<long long>> sub;
  sub.reserve(rows.size());
  for (auto i : rows) sub.push_back(rows_[i]);
  if (auto e = echelon_i64(std::move(sub))) {
    if (e->pivot_cols.size() + 1 != ncols_) return std::nullopt;
    std::vector<bool> is_pivot(ncols_, false);
    for (auto p : e->pivot_cols) is_pivot[p] = true;
    std::size_t f = 0;
    while (is_pivot[f]) ++f;
    return canonical_direction(kernel_vector_i64(*e, ncols_, f));
  }
  Mat sub_m(rows.size(), ncols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < ncols_; ++j) sub_m.at(i, j) = rows_[rows[i]][j];
  auto kb = kernel_basis(sub_m);
  if (kb.size() != 1) return std::nullopt;
  return kb[0];
}

std::size_t affine_rank(const std::vector<Vec>& points) {
  if (points.size() <= 1) return 0;
  Mat diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_row(points[i] - points[0]);
  return rank(diffs);
}

}  // namespace polywalk
