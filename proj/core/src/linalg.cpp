#include "apolar/linalg.hpp"

#include <algorithm>

#include "apolar/error.hpp"

namespace apolar {

namespace {
constexpr std::string_view kModule = "exact-linalg";

void check_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    raise(Errc::AmbientMismatch, kModule,
          "ambient dimensions " + std::to_string(a.ambient()) + " and " + std::to_string(b.ambient()));
}

Matrix stack(const Matrix& a, const Matrix& b) {
  Matrix r(0, a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) r.append_row(a.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i) r.append_row(b.row(i));
  return r;
}

// Fraction-free Gauss-Jordan on an integer image of a rational matrix. After
// every step all pivot entries equal the last pivot, so dividing by it at the
// end gives the reduced form.
Echelon bareiss(const Matrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<Integer>> M(R, std::vector<Integer>(C));
  for (std::size_t i = 0; i < R; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < C; ++j) {
      const Rational& q = m(i, j).coords()[0];
      if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    Integer g = 0;
    for (std::size_t j = 0; j < C; ++j) {
      const Rational& q = m(i, j).coords()[0];
      if (q == 0) continue;
      M[i][j] = q.get_num() * (l / q.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), M[i][j].get_mpz_t());
    }
    if (g > 1)
      for (auto& x : M[i]) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  std::vector<bool> nonzero(R);
  for (std::size_t i = 0; i < R; ++i)
    nonzero[i] = std::any_of(M[i].begin(), M[i].end(), [](const Integer& x) { return x != 0; });

  Integer prev = 1, t;
  std::vector<std::size_t> pivots;
  std::size_t k = 0;
  for (std::size_t c = 0; c < C && k < R; ++c) {
    std::size_t p = k;
    while (p < R && M[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(M[p], M[k]);
    std::swap(nonzero[p], nonzero[k]);
    const Integer piv = M[k][c];
    for (std::size_t i = 0; i < R; ++i) {
      if (i == k || !nonzero[i]) continue;
      const Integer a = M[i][c];
      auto& row = M[i];
      const auto& prow = M[k];
      bool any = false;
      for (std::size_t j = 0; j < C; ++j) {
        if (a == 0) {
          if (row[j] == 0) continue;
          row[j] *= piv;
        } else {
          row[j] *= piv;
          if (prow[j] != 0) {
            t = a * prow[j];
            row[j] -= t;
          }
        }
        if (prev != 1) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
        if (row[j] != 0) any = true;
      }
      nonzero[i] = any;
    }
    prev = piv;
    pivots.push_back(c);
    ++k;
  }
  Echelon e{Matrix(pivots.size(), C), pivots};
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < C; ++j) {
      if (M[i][j] == 0) continue;
      Rational q(M[i][j], prev);
      q.canonicalize();
      e.rref(i, j) = FieldElement(q);
    }
  return e;
}

Echelon gauss_jordan(const Matrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  Matrix M = m;
  std::vector<std::size_t> pivots;
  std::size_t k = 0;
  for (std::size_t c = 0; c < C && k < R; ++c) {
    std::size_t p = k;
    while (p < R && M(p, c).is_zero()) ++p;
    if (p == R) continue;
    if (p != k)
      for (std::size_t j = 0; j < C; ++j) std::swap(M(p, j), M(k, j));
    FieldElement inv = field_invert(M(k, c));
    for (std::size_t j = c; j < C; ++j)
      if (!M(k, j).is_zero()) M(k, j) *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == k || M(i, c).is_zero()) continue;
      FieldElement f = M(i, c);
      for (std::size_t j = c; j < C; ++j)
        if (!M(k, j).is_zero()) M(i, j) -= f * M(k, j);
    }
    pivots.push_back(c);
    ++k;
  }
  Echelon e{Matrix(pivots.size(), C), pivots};
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < C; ++j) e.rref(i, j) = M(i, j);
  return e;
}

Matrix multiply_transposed(const Matrix& a, const Matrix& b) {
  // a * b^T
  Matrix r(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) {
      FieldElement s;
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (!a(i, k).is_zero() && !b(j, k).is_zero()) s += a(i, k) * b(j, k);
      r(i, j) = s;
    }
  return r;
}

Matrix combine(const Matrix& coeffs, const Matrix& rows) {
  // each row of coeffs picks a combination of rows
  Matrix r(coeffs.rows(), rows.cols());
  for (std::size_t i = 0; i < coeffs.rows(); ++i)
    for (std::size_t k = 0; k < coeffs.cols(); ++k) {
      const FieldElement& c = coeffs(i, k);
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < rows.cols(); ++j)
        if (!rows(k, j).is_zero()) r(i, j) += c * rows(k, j);
    }
  return r;
}
}  // namespace

// ------------------------------------------------------------------ Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement(1);
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const FieldElement> v) {
  if (v.size() != cols_) raise(Errc::InvalidInput, kModule, "row length does not match column count");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::apply(std::span<const FieldElement> v) const {
  if (v.size() != cols_) raise(Errc::InvalidInput, kModule, "vector length does not match column count");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

bool Matrix::is_rational() const {
  return std::all_of(data_.begin(), data_.end(), [](const FieldElement& x) { return x.is_rational(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) raise(Errc::InvalidInput, kModule, "matrix product shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
    }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Echelon row_reduce(const Matrix& m) { return m.is_rational() ? bareiss(m) : gauss_jordan(m); }

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

Matrix kernel_vectors(const Echelon& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix k(0, cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = FieldElement(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (!e.rref(r, f).is_zero()) v[e.pivots[r]] = -e.rref(r, f);
    k.append_row(v);
  }
  return k;
}

bool in_row_space(const Echelon& e, std::span<const FieldElement> v) {
  Vector w(v.begin(), v.end());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    FieldElement f = w[e.pivots[r]];
    if (f.is_zero()) continue;
    for (std::size_t j = e.pivots[r]; j < w.size(); ++j)
      if (!e.rref(r, j).is_zero()) w[j] -= f * e.rref(r, j);
  }
  return std::all_of(w.begin(), w.end(), [](const FieldElement& x) { return x.is_zero(); });
}

Echelon row_space_intersection(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.cols(), ka = a.rows(), kb = b.rows();
  if (ka == 0 || kb == 0) return Echelon{Matrix(0, n), {}};
  // (lambda, mu) with lambda*a = mu*b
  Matrix sys(n, ka + kb);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < ka; ++i) sys(j, i) = a(i, j);
    for (std::size_t i = 0; i < kb; ++i) sys(j, ka + i) = -b(i, j);
  }
  Matrix ker = kernel_vectors(row_reduce(sys), ka + kb);
  Matrix lambda(ker.rows(), ka);
  for (std::size_t r = 0; r < ker.rows(); ++r)
    for (std::size_t i = 0; i < ka; ++i) lambda(r, i) = ker(r, i);
  return row_reduce(combine(lambda, a));
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::zero(std::size_t n) { return Subspace(n, Echelon{Matrix(0, n), {}}, false); }
Subspace Subspace::full(std::size_t n) { return Subspace(n, Echelon{Matrix(0, n), {}}, true); }
Subspace Subspace::span(const Matrix& rows) { return Subspace(rows.cols(), row_reduce(rows), false); }
Subspace Subspace::solutions_of(const Matrix& equations) {
  return Subspace(equations.cols(), row_reduce(equations), true);
}

Matrix Subspace::basis() const {
  if (!eqs_) return ech_.rref;
  return row_reduce(kernel_vectors(ech_, ambient_)).rref;
}

Matrix Subspace::equations() const {
  if (eqs_) return ech_.rref;
  return row_reduce(kernel_vectors(ech_, ambient_)).rref;
}

bool Subspace::contains(std::span<const FieldElement> v) const {
  if (v.size() != ambient_) raise(Errc::AmbientMismatch, kModule, "vector length does not match ambient dimension");
  if (!eqs_) return in_row_space(ech_, v);
  for (std::size_t r = 0; r < ech_.rank(); ++r) {
    FieldElement s;
    for (std::size_t j = ech_.pivots[r]; j < ambient_; ++j)
      if (!ech_.rref(r, j).is_zero() && !v[j].is_zero()) s += ech_.rref(r, j) * v[j];
    if (!s.is_zero()) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  check_ambient(*this, other);
  if (other.dim() > dim()) return false;
  if (eqs_ && other.eqs_) {
    // other ⊆ this  iff  this^perp ⊆ other^perp
    for (std::size_t r = 0; r < ech_.rank(); ++r)
      if (!in_row_space(other.ech_, ech_.rref.row(r))) return false;
    return true;
  }
  if (!other.eqs_) {
    for (std::size_t r = 0; r < other.ech_.rank(); ++r)
      if (!contains(other.ech_.rref.row(r))) return false;
    return true;
  }
  Matrix mine = equations();
  for (std::size_t r = 0; r < mine.rows(); ++r)
    if (!in_row_space(other.ech_, mine.row(r))) return false;
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_ || a.dim() != b.dim()) return false;
  if (a.eqs_ == b.eqs_) return a.ech_.pivots == b.ech_.pivots && a.ech_.rref == b.ech_.rref;
  return a.contains(b);
}

Subspace kernel(const Matrix& m) { return Subspace::solutions_of(m); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (!a.has_equation_form() && !b.has_equation_form())
    return Subspace::span(stack(a.stored().rref, b.stored().rref));
  if (a.has_equation_form() && b.has_equation_form())
    return Subspace::solutions_of(row_space_intersection(a.stored().rref, b.stored().rref).rref);
  const Subspace& basis_side = a.has_equation_form() ? b : a;
  const Subspace& eq_side = a.has_equation_form() ? a : b;
  const Matrix& A = basis_side.stored().rref;
  const Matrix& E = eq_side.stored().rref;
  if (E.rows() == 0) return eq_side;
  // equations lambda*E with lambda*(E A^T) = 0
  Matrix M = multiply_transposed(E, A);  // r x k
  Matrix lambda = kernel_vectors(row_reduce(M.transpose()), E.rows());
  return Subspace::solutions_of(combine(lambda, E));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  if (a.is_full()) return b;
  if (b.is_full()) return a;
  if (a.has_equation_form() && b.has_equation_form())
    return Subspace::solutions_of(stack(a.stored().rref, b.stored().rref));
  if (!a.has_equation_form() && !b.has_equation_form())
    return Subspace::span(row_space_intersection(a.stored().rref, b.stored().rref).rref);
  const Subspace& basis_side = a.has_equation_form() ? b : a;
  const Subspace& eq_side = a.has_equation_form() ? a : b;
  const Matrix& A = basis_side.stored().rref;
  const Matrix& E = eq_side.stored().rref;
  if (A.rows() == 0) return basis_side;
  Matrix M = multiply_transposed(E, A);  // r x k, need M lambda^T = 0
  Matrix lambda = kernel_vectors(row_reduce(M), A.rows());
  return Subspace::span(combine(lambda, A));
}

std::optional<Vector> solve(const Matrix& m, std::span<const FieldElement> b) {
  if (b.size() != m.rows()) raise(Errc::InvalidInput, kModule, "right-hand side length does not match rows");
  const std::size_t C = m.cols();
  Matrix aug(m.rows(), C + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < C; ++j) aug(i, j) = m(i, j);
    aug(i, C) = b[i];
  }
  Echelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == C) return std::nullopt;
  Vector x(C);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.rref(r, C);
  return x;
}

}  // namespace apolar
