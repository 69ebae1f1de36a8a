#ifndef POLYWALK_RATIONAL_HPP
#define POLYWALK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace polywalk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Vec = std::vector<Rat>;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }
bool is_integral(const Vec& v);

// Rectangular matrix of exact rationals.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : ncols_(cols), rows_(rows, Vec(cols, Rat(0))) {}
  explicit Mat(std::vector<Vec> rows);
  Mat(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  Vec& row(std::size_t i) { return rows_[i]; }
  const Vec& row(std::size_t i) const { return rows_[i]; }
  Rat& at(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  void push_row(Vec r);
  const std::vector<Vec>& rows() const { return rows_; }

private:
  std::size_t ncols_ = 0;
  std::vector<Vec> rows_;
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rat& s);
Rat dot(const Vec& a, const Vec& b);
Vec mat_vec(const Mat& m, const Vec& x);
bool is_zero(const Vec& v);

// Lexicographic order on exact coordinates; used for canonical sorting and
// as the deterministic point key in step graphs.
bool lex_less(const Vec& a, const Vec& b);

// Scale to coprime integer entries, preserving direction.
Vec integer_direction(const Vec& v);
// As above, then flip so the first nonzero entry is positive. Returns the
// sign flip applied (+1 or -1) through *sign when non-null.
Vec canonical_direction(const Vec& v, int* sign = nullptr);

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

std::string vec_to_string(const Vec& v);

}  // namespace polywalk

#endif
