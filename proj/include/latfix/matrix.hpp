#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "latfix/rational.hpp"

namespace latfix {

using QVector = std::vector<Rational>;

// Vector helpers. All binary operations require equal lengths.
QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator-(const QVector& a);
QVector operator*(const Rational& s, const QVector& a);
Rational dot(const QVector& a, const QVector& b);

bool is_zero(const QVector& v);
bool is_nonnegative(const QVector& v);
/// Componentwise a <= b.
bool leq(const QVector& a, const QVector& b);
QVector componentwise_max(const QVector& a, const QVector& b);
QVector modulus(const QVector& v);
Rational sup_norm(const QVector& v);
Rational one_norm(const QVector& v);

/// Scales v by a positive rational so that it becomes a primitive integer
/// vector (integral entries with gcd 1). The zero vector is returned as is.
QVector primitive(const QVector& v);

std::vector<std::string> to_strings(const QVector& v);

/// Dense row-major rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  explicit QMatrix(const std::vector<QVector>& rows);

  static QMatrix identity(std::size_t n);
  /// Block-diagonal matrix with the given square blocks.
  static QMatrix block_diagonal(const std::vector<QMatrix>& blocks);
  /// Matrix whose columns are the given vectors.
  static QMatrix from_columns(const std::vector<QVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  QVector row(std::size_t i) const;
  QVector column(std::size_t j) const;
  std::vector<QVector> row_list() const;

  QMatrix transpose() const;
  QMatrix power(unsigned exponent) const;
  Rational trace() const;

  QVector operator*(const QVector& v) const;
  QMatrix operator*(const QMatrix& other) const;
  QMatrix operator+(const QMatrix& other) const;
  QMatrix operator-(const QMatrix& other) const;
  QMatrix operator*(const Rational& s) const;

  bool operator==(const QMatrix& other) const;

  bool is_nonnegative() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace latfix
