#include "genuslab/linalg.hpp"

namespace genuslab {

FieldMatrix identity_matrix(const FieldSpec& f, std::size_t n) {
  FieldMatrix m(n, n, FieldElement::zero(f));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(f);
  return m;
}

FieldMatrix zero_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols) {
  return FieldMatrix(rows, cols, FieldElement::zero(f));
}

FieldMatrix matrix_from_ints(const FieldSpec& f, const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  FieldMatrix m(r, c, FieldElement::zero(f));
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DomainError("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = FieldElement(f, rows[i][j]);
  }
  return m;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(FieldMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const auto inv = m(row, col).inv();
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const auto factor = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

FieldElement determinant(const FieldMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant of non-square matrix");
  if (m.rows() == 0) throw DomainError("determinant of empty matrix");
  FieldMatrix a = m;
  const std::size_t n = a.rows();
  auto det = FieldElement::one(a(0, 0).spec());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return FieldElement::zero(det.spec());
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    const auto inv = a(col, col).inv();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const auto factor = a(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
    }
  }
  return det;
}

std::optional<FieldMatrix> inverse(const FieldMatrix& m) {
  if (!m.is_square() || m.rows() == 0) throw DomainError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  const auto& f = m(0, 0).spec();
  FieldMatrix aug(n, 2 * n, FieldElement::zero(f));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = FieldElement::one(f);
  }
  const auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  FieldMatrix inv(n, n, FieldElement::zero(f));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::size_t rank(const FieldMatrix& m) {
  FieldMatrix a = m;
  return rref(a).size();
}

std::optional<std::vector<FieldElement>> solve(const FieldMatrix& a, const std::vector<FieldElement>& b) {
  if (b.size() != a.rows()) throw DomainError("right-hand side has wrong length");
  if (a.rows() == 0) return std::vector<FieldElement>{};
  const auto& f = b.front().spec();
  FieldMatrix aug(a.rows(), a.cols() + 1, FieldElement::zero(f));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  std::vector<FieldElement> x(a.cols(), FieldElement::zero(f));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols());
  return x;
}

std::vector<std::vector<FieldElement>> nullspace(const FieldMatrix& a) {
  if (a.cols() == 0) return {};
  if (a.rows() == 0) throw DomainError("nullspace of a matrix without rows needs a field");
  const auto& f = a(0, 0).spec();
  FieldMatrix m = a;
  const auto piv = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(a.cols(), FieldElement::zero(f));
    v[free] = FieldElement::one(f);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool matrix_less(const FieldMatrix& a, const FieldMatrix& b) {
  const auto& x = a.data();
  const auto& y = b.data();
  for (std::size_t k = 0; k < std::min(x.size(), y.size()); ++k)
    if (x[k].index() != y[k].index()) return x[k].index() < y[k].index();
  return x.size() < y.size();
}

std::string matrix_to_string(const FieldMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i != 0) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) out += ", ";
      out += m(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace genuslab
