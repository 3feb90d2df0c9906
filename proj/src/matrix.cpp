#include "latfix/matrix.hpp"

#include <algorithm>
#include <string>

namespace latfix {

namespace {

void require_same_length(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
}

}  // namespace

QVector operator+(const QVector& a, const QVector& b) {
  require_same_length(a, b);
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVector operator-(const QVector& a, const QVector& b) {
  require_same_length(a, b);
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVector operator-(const QVector& a) {
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

QVector operator*(const Rational& s, const QVector& a) {
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Rational dot(const QVector& a, const QVector& b) {
  require_same_length(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

bool is_nonnegative(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x >= 0; });
}

bool leq(const QVector& a, const QVector& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

QVector componentwise_max(const QVector& a, const QVector& b) {
  require_same_length(a, b);
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? b[i] : a[i];
  return r;
}

QVector modulus(const QVector& v) {
  QVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = abs(v[i]);
  return r;
}

Rational sup_norm(const QVector& v) {
  Rational m = 0;
  for (const auto& x : v) m = std::max(m, abs(x));
  return m;
}

Rational one_norm(const QVector& v) {
  Rational s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

QVector primitive(const QVector& v) {
  if (is_zero(v)) return v;
  const Integer d = common_denominator(v);
  std::vector<Integer> ints;
  ints.reserve(v.size());
  for (const auto& x : v) ints.emplace_back(Integer(x.get_num() * (d / x.get_den())));
  const Integer g = content(ints);
  QVector r;
  r.reserve(v.size());
  for (const auto& x : ints) r.emplace_back(Rational(x / g));
  return r;
}

std::vector<std::string> to_strings(const QVector& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix::QMatrix(const std::vector<QVector>& rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.front().size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::block_diagonal(const std::vector<QMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.square()) throw InvalidInput("block_diagonal needs square blocks");
    n += b.rows();
  }
  QMatrix m(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& columns) {
  if (columns.empty()) return {};
  QMatrix m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != m.rows()) throw InvalidInput("ragged columns");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = columns[j][i];
  }
  return m;
}

QVector QMatrix::row(std::size_t i) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

QVector QMatrix::column(std::size_t j) const {
  QVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<QVector> QMatrix::row_list() const {
  std::vector<QVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::power(unsigned exponent) const {
  if (!square()) throw InvalidInput("power of a non-square matrix");
  QMatrix result = identity(rows_);
  QMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Rational QMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (v.size() != cols_) throw InvalidInput("matrix-vector shape mismatch");
  QVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn((*this)(i, j)) != 0) s += (*this)(i, j) * v[j];
    }
    r[i] = s;
  }
  return r;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw InvalidInput("matrix product shape mismatch");
  QMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        if (sgn(other(k, j)) != 0) r(i, j) += a * other(k, j);
      }
    }
  }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvalidInput("shape mismatch");
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + other.data_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvalidInput("shape mismatch");
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - other.data_[i];
  return r;
}

QMatrix QMatrix::operator*(const Rational& s) const {
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = s * data_[i];
  return r;
}

bool QMatrix::operator==(const QMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool QMatrix::is_nonnegative() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x >= 0; });
}

}  // namespace latfix
