#pragma once

#include "pwedge/rational.hpp"

#include <cstddef>
#include <vector>

namespace pwedge {

// Fixed-length rational vector; equality is entrywise.
using QVector = std::vector<Rational>;

Rational dot(const QVector& a, const QVector& b);
QVector add(const QVector& a, const QVector& b);
QVector subtract(const QVector& a, const QVector& b);
QVector scale(const QVector& a, const Rational& s);
bool is_zero(const QVector& a);

// Dense rational matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  static QMatrix identity(std::size_t n);
  // Empty row list is allowed when cols is given explicitly.
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);
  static QMatrix from_rows(const std::vector<QVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  QVector row(std::size_t r) const;
  QVector apply(const QVector& x) const;  // M * x

  bool operator==(const QMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Exact rank over the rationals.  Pivoting is deterministic: columns in
// order, first nonzero row in each column.
std::size_t rank(const QMatrix& m);

// Basis of the right nullspace; empty iff rank(m) == cols(m).
// Every returned v satisfies m * v = 0 exactly.
std::vector<QVector> nullspace(const QMatrix& m);

struct SolveResult {
  enum class Kind { Unique, Underdetermined, Infeasible };
  Kind kind = Kind::Infeasible;
  QVector solution;  // populated iff kind == Unique

  bool unique() const { return kind == Kind::Unique; }
};

// Solves a * x = b exactly.  Unique iff rank(a) == cols(a) and the system is
// consistent; the three-way result is the contract, no exceptions.
SolveResult solve_affine(const QMatrix& a, const QVector& b);

}  // namespace pwedge
