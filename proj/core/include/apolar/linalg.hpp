#ifndef APOLAR_LINALG_HPP
#define APOLAR_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "apolar/field.hpp"

namespace apolar {

using Vector = std::vector<FieldElement>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<FieldElement> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const FieldElement> v);
  Matrix transpose() const;
  Vector apply(std::span<const FieldElement> v) const;
  bool is_zero() const;
  // True when every entry is rational.
  bool is_rational() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElement> data_;
};

/// Reduced row-echelon form. Only the nonzero rows are kept.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

// Fraction-free elimination over Q, Gauss-Jordan over extensions. Pivots are
// the first nonzero entries in column order.
Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A subspace of k^n. Held either by an RREF basis or by RREF equations
/// (then the subspace is their common kernel); each form is canonical.
class Subspace {
 public:
  static Subspace zero(std::size_t n);
  static Subspace full(std::size_t n);
  static Subspace span(const Matrix& rows);
  static Subspace solutions_of(const Matrix& equations);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return eqs_ ? ambient_ - ech_.rank() : ech_.rank(); }
  std::size_t codim() const { return ambient_ - dim(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  bool has_equation_form() const { return eqs_; }

  // RREF basis (rows).
  Matrix basis() const;
  // RREF equations (rows spanning the annihilator).
  Matrix equations() const;
  const Echelon& stored() const { return ech_; }

  bool contains(std::span<const FieldElement> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Subspace(std::size_t n, Echelon e, bool eqs) : ambient_(n), ech_(std::move(e)), eqs_(eqs) {}
  std::size_t ambient_ = 0;
  Echelon ech_;
  bool eqs_ = false;
};

/// {v : Mv = 0}; stored in equation form, dim = cols - rank.
Subspace kernel(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// One solution of Mx = b (free variables set to 0), or none.
std::optional<Vector> solve(const Matrix& m, std::span<const FieldElement> b);

/// Basis of the kernel of an echelon system: one vector per free column.
Matrix kernel_vectors(const Echelon& e, std::size_t cols);
/// Whether v lies in the row space of an echelon form.
bool in_row_space(const Echelon& e, std::span<const FieldElement> v);
/// Row-space intersection of two spans.
Echelon row_space_intersection(const Matrix& a, const Matrix& b);

}  // namespace apolar

#endif
