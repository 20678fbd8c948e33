#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lagpants {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

using IPoint = std::vector<long long>;
using QPoint = std::vector<Rational>;
using QMatrix = std::vector<QPoint>;  // row major
using IMatrix = std::vector<IPoint>;  // row major

QPoint to_q(const IPoint& p);
std::vector<double> to_double(const QPoint& p);
double to_double(const Rational& r);

// Accepts "3", "-2/5" or a decimal such as "0.25".
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

long long gcd_of(const IPoint& v);
// Smallest integer vector positively proportional to v. Throws on v = 0.
IPoint primitive(const QPoint& v);
IPoint primitive(const IPoint& v);

Rational dot(const QPoint& a, const QPoint& b);
QPoint sub(const QPoint& a, const QPoint& b);
QPoint add(const QPoint& a, const QPoint& b);
QPoint scale(const QPoint& a, const Rational& s);
bool is_zero(const QPoint& a);

// Exact Gaussian elimination helpers.
int rank(QMatrix m);
// Row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(QMatrix& m);
// Basis of {x : A x = 0}, with ncols unknowns.
std::vector<QPoint> nullspace(const QMatrix& a, std::size_t ncols);
// Unique solution of A x = b, or nullopt if none or not unique.
std::optional<QPoint> solve_unique(const QMatrix& a, const QPoint& b);

long long det(const IMatrix& m);
Rational det(const QMatrix& m);
// Inverse of a unimodular integer matrix.
IMatrix inverse_unimodular(const IMatrix& m);
IMatrix transpose(const IMatrix& m);
IMatrix multiply(const IMatrix& a, const IMatrix& b);
IPoint apply(const IMatrix& m, const IPoint& v);
QPoint apply(const IMatrix& m, const QPoint& v);
IMatrix identity_matrix(std::size_t n);

// Exact comparison of integer directions by polar angle in [0, 2pi).
bool angle_less(const IPoint& a, const IPoint& b);

}  // namespace lagpants
