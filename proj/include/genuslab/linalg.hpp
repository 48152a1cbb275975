#pragma once

// Small dense matrices and exact linear algebra over F_q.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "genuslab/error.hpp"
#include "genuslab/field.hpp"

namespace genuslab {

/// Row-major dense matrix. T needs +, -, * and ==.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix transpose() const {
    Matrix t = *this;
    t.rows_ = cols_;
    t.cols_ = rows_;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix dimension mismatch in product");
    Matrix r(rows_, o.cols_, data_.empty() ? o.data_.front() : data_.front());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < o.cols_; ++j) {
        T acc = (*this)(i, 0) * o(0, j);
        for (std::size_t k = 1; k < cols_; ++k) acc = acc + (*this)(i, k) * o(k, j);
        r(i, j) = acc;
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix dimension mismatch in sum");
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix dimension mismatch in difference");
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using FieldMatrix = Matrix<FieldElement>;

FieldMatrix identity_matrix(const FieldSpec& f, std::size_t n);
FieldMatrix zero_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
/// Builds from integer entries reduced mod p.
FieldMatrix matrix_from_ints(const FieldSpec& f, const std::vector<std::vector<long long>>& rows);

FieldElement determinant(const FieldMatrix& m);
std::optional<FieldMatrix> inverse(const FieldMatrix& m);
std::size_t rank(const FieldMatrix& m);

/// One solution x of A x = b (free variables set to zero), if consistent.
std::optional<std::vector<FieldElement>> solve(const FieldMatrix& a, const std::vector<FieldElement>& b);

/// Basis of {x : A x = 0}, one vector per free column in reduced row echelon
/// form (that free coordinate 1, other free coordinates 0).
std::vector<std::vector<FieldElement>> nullspace(const FieldMatrix& a);

/// Lexicographic on entry indices, row-major.
bool matrix_less(const FieldMatrix& a, const FieldMatrix& b);

std::string matrix_to_string(const FieldMatrix& m);

}  // namespace genuslab
