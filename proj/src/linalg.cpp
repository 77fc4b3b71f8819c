#include "pwedge/linalg.hpp"

#include <cctype>
#include <stdexcept>

namespace pwedge {

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool negative = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!is_digits(num) || !is_digits(den)) return std::nullopt;
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  return Rational(n, d);  // the pair constructor canonicalizes
}

std::string format_rational(const Rational& value) {
  return value.str();
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

QVector add(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVector subtract(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("subtract: length mismatch");
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVector scale(const QVector& a, const Rational& s) {
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

bool is_zero(const QVector& a) {
  for (const Rational& x : a)
    if (x != 0) return false;
  return true;
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  if (rows.empty()) throw std::invalid_argument("from_rows: need explicit cols for empty input");
  return from_rows(rows, rows.front().size());
}

QVector QMatrix::row(std::size_t r) const {
  QVector out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

QVector QMatrix::apply(const QVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: length mismatch");
  QVector out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * x[c];
  return out;
}

namespace {

// Gauss-Jordan reduction to reduced row echelon form over the rationals.
// Pivot columns are limited to [0, pivot_cols); trailing columns (an
// augmented right-hand side) are carried along.  Returns the pivot columns.
std::vector<std::size_t> rref(std::vector<QVector>& rows, std::size_t total_cols,
                              std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < pivot_cols && next_row < rows.size(); ++c) {
    std::size_t sel = rows.size();
    for (std::size_t r = next_row; r < rows.size(); ++r) {
      if (rows[r][c] != 0) {
        sel = r;
        break;
      }
    }
    if (sel == rows.size()) continue;
    std::swap(rows[next_row], rows[sel]);
    const Rational inv_pivot = Rational(1) / rows[next_row][c];
    for (std::size_t k = c; k < total_cols; ++k) rows[next_row][k] *= inv_pivot;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next_row || rows[r][c] == 0) continue;
      const Rational factor = rows[r][c];
      for (std::size_t k = c; k < total_cols; ++k)
        rows[r][k] -= factor * rows[next_row][k];
    }
    pivots.push_back(c);
    ++next_row;
  }
  return pivots;
}

std::vector<QVector> matrix_rows(const QMatrix& m) {
  std::vector<QVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

}  // namespace

std::size_t rank(const QMatrix& m) {
  auto rows = matrix_rows(m);
  return rref(rows, m.cols(), m.cols()).size();
}

std::vector<QVector> nullspace(const QMatrix& m) {
  auto rows = matrix_rows(m);
  const std::vector<std::size_t> pivots = rref(rows, m.cols(), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<QVector> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    QVector v(m.cols(), Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve_affine(const QMatrix& a, const QVector& b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("solve_affine: rhs length must match row count");
  std::vector<QVector> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    QVector row = a.row(r);
    row.push_back(b[r]);
    rows.push_back(std::move(row));
  }
  const std::vector<std::size_t> pivots = rref(rows, a.cols() + 1, a.cols());

  for (std::size_t r = pivots.size(); r < rows.size(); ++r)
    if (rows[r][a.cols()] != 0) return {SolveResult::Kind::Infeasible, {}};
  if (pivots.size() < a.cols()) return {SolveResult::Kind::Underdetermined, {}};

  QVector x(a.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][a.cols()];
  return {SolveResult::Kind::Unique, std::move(x)};
}

}  // namespace pwedge
