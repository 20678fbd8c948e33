#include "lagpants/exact.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lagpants/errors.hpp"

namespace lagpants {

QPoint to_q(const IPoint& p) {
  QPoint q;
  q.reserve(p.size());
  for (long long v : p) q.emplace_back(v);
  return q;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::vector<double> to_double(const QPoint& p) {
  std::vector<double> out;
  out.reserve(p.size());
  for (const auto& v : p) out.push_back(to_double(v));
  return out;
}

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t.push_back(c);
  if (t.empty()) throw InputError("empty number");
  try {
    auto slash = t.find('/');
    if (slash != std::string::npos) {
      Integer num(t.substr(0, slash));
      Integer den(t.substr(slash + 1));
      if (den == 0) throw InputError("zero denominator in '" + s + "'");
      return Rational(num, den);
    }
    auto dot_pos = t.find('.');
    if (dot_pos == std::string::npos) return Rational(Integer(t));
    std::string whole = t.substr(0, dot_pos);
    std::string frac = t.substr(dot_pos + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (neg || (!whole.empty() && whole[0] == '+')) whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    Integer den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Integer num = Integer(whole) * den + (frac.empty() ? Integer(0) : Integer(frac));
    Rational r(num, den);
    return neg ? Rational(-r) : r;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("cannot parse number '" + s + "'");
  }
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

long long gcd_of(const IPoint& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

IPoint primitive(const IPoint& v) {
  long long g = gcd_of(v);
  if (g == 0) throw DegeneracyError("zero vector has no primitive direction");
  IPoint out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IPoint primitive(const QPoint& v) {
  Integer l = 1;
  for (const auto& x : v) {
    Integer d = boost::multiprecision::denominator(x);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  IPoint iv;
  iv.reserve(v.size());
  for (const auto& x : v) {
    Integer n = boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x));
    iv.push_back(n.convert_to<long long>());
  }
  return primitive(iv);
}

Rational dot(const QPoint& a, const QPoint& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QPoint sub(const QPoint& a, const QPoint& b) {
  QPoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QPoint add(const QPoint& a, const QPoint& b) {
  QPoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QPoint scale(const QPoint& a, const Rational& s) {
  QPoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

bool is_zero(const QPoint& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

std::vector<int> row_reduce(QMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size();
  std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rank(QMatrix m) { return static_cast<int>(row_reduce(m).size()); }

std::vector<QPoint> nullspace(const QMatrix& a, std::size_t ncols) {
  QMatrix m = a;
  for (auto& row : m)
    if (row.size() != ncols) throw InputError("nullspace: ragged matrix");
  std::vector<int> pivots = row_reduce(m);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<QPoint> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    QPoint v(ncols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(v);
  }
  return basis;
}

std::optional<QPoint> solve_unique(const QMatrix& a, const QPoint& b) {
  if (a.empty()) return std::nullopt;
  std::size_t n = a[0].size();
  QMatrix m = a;
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  std::vector<int> pivots = row_reduce(m);
  if (!pivots.empty() && pivots.back() == static_cast<int>(n)) return std::nullopt;
  if (pivots.size() != n) return std::nullopt;
  QPoint x(n);
  for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = m[i][n];
  return x;
}

Rational det(const QMatrix& m) {
  QMatrix a = m;
  std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

long long det(const IMatrix& m) {
  QMatrix q;
  for (const auto& row : m) q.push_back(to_q(row));
  Rational d = det(q);
  return boost::multiprecision::numerator(d).convert_to<long long>();
}

IMatrix inverse_unimodular(const IMatrix& m) {
  std::size_t n = m.size();
  QMatrix a;
  for (std::size_t i = 0; i < n; ++i) {
    QPoint row = to_q(m[i]);
    for (std::size_t j = 0; j < n; ++j) row.emplace_back(i == j ? 1 : 0);
    a.push_back(row);
  }
  std::vector<int> pivots = row_reduce(a);
  if (pivots.size() < n || pivots[n - 1] != static_cast<int>(n - 1))
    throw DegeneracyError("matrix is singular");
  IMatrix inv(n, IPoint(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = a[i][n + j];
      if (boost::multiprecision::denominator(v) != 1)
        throw InputError("matrix is not unimodular");
      inv[i][j] = boost::multiprecision::numerator(v).convert_to<long long>();
    }
  }
  return inv;
}

IMatrix transpose(const IMatrix& m) {
  if (m.empty()) return {};
  IMatrix t(m[0].size(), IPoint(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
  return t;
}

IMatrix multiply(const IMatrix& a, const IMatrix& b) {
  IMatrix c(a.size(), IPoint(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

IPoint apply(const IMatrix& m, const IPoint& v) {
  IPoint r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

QPoint apply(const IMatrix& m, const QPoint& v) {
  QPoint r(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

IMatrix identity_matrix(std::size_t n) {
  IMatrix m(n, IPoint(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

namespace {

int half_plane(const IPoint& a) {
  // 0 for angles in [0, pi), 1 for [pi, 2pi)
  if (a[1] > 0 || (a[1] == 0 && a[0] > 0)) return 0;
  return 1;
}

}  // namespace

bool angle_less(const IPoint& a, const IPoint& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return a[0] * b[1] - a[1] * b[0] > 0;
}

}  // namespace lagpants
