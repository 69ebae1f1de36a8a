#include "polywalk/rational.hpp"

#include <sstream>

#include "polywalk/errors.hpp"

namespace polywalk {

Mat::Mat(std::vector<Vec> rows) : rows_(std::move(rows)) {
  if (!rows_.empty()) ncols_ = rows_[0].size();
  for (const auto& r : rows_)
    if (r.size() != ncols_) throw invalid("ShapeMismatch", "matrix rows of unequal length");
}

Mat::Mat(std::initializer_list<std::initializer_list<long long>> rows) {
  for (const auto& r : rows) {
    Vec v;
    v.reserve(r.size());
    for (long long x : r) v.emplace_back(x);
    push_row(std::move(v));
  }
}

void Mat::push_row(Vec r) {
  if (rows_.empty())
    ncols_ = r.size();
  else if (r.size() != ncols_)
    throw invalid("ShapeMismatch", "matrix rows of unequal length");
  rows_.push_back(std::move(r));
}

bool is_integral(const Vec& v) {
  for (const auto& x : v)
    if (!is_integer(x)) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Vec& a, const Rat& s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

Rat dot(const Vec& a, const Vec& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec mat_vec(const Mat& m, const Vec& x) {
  Vec r(m.nrows());
  for (std::size_t i = 0; i < m.nrows(); ++i) r[i] = dot(m.row(i), x);
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool lex_less(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return a.size() < b.size();
}

Vec integer_direction(const Vec& v) {
  Int l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, den(x));
  Int g = 0;
  std::vector<Int> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = num(v[i]) * (l / den(v[i]));
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(ints[i]));
  }
  if (g == 0) throw invalid("ZeroVector", "cannot normalize the zero vector");
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(ints[i] / g);
  return r;
}

Vec canonical_direction(const Vec& v, int* sign) {
  Vec r = integer_direction(v);
  int s = 1;
  for (const auto& x : r) {
    if (x > 0) break;
    if (x < 0) {
      s = -1;
      break;
    }
  }
  if (s < 0)
    for (auto& x : r) x = -x;
  if (sign) *sign = s;
  return r;
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << num(r);
  if (den(r) != 1) os << "/" << den(r);
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw invalid("ParseError", "zero denominator");
    return Rat(p, q);
  } catch (const std::exception&) {
    throw invalid("ParseError", "bad rational literal: " + s);
  }
}

std::string vec_to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_to_string(v[i]);
  }
  return s + ")";
}

}  // namespace polywalk
