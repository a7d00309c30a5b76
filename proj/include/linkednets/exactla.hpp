#pragma once

// Exact linear algebra over the rationals.
//
// Subspaces are always kept in reduced row echelon form, so two subspaces
// are equal exactly when their basis matrices are entry-wise equal.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace linkednets {

using Rational = mpq_class;
using RVector = std::vector<Rational>;

/// Parses an integer literal or a "p/q" string.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols);
  RMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RMatrix identity(std::size_t n);
  static RMatrix zero(std::size_t rows, std::size_t cols) { return RMatrix(rows, cols); }
  static RMatrix from_rows(const std::vector<RVector>& rows, std::size_t cols);
  static RMatrix from_columns(const std::vector<RVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RVector row(std::size_t r) const;
  RVector column(std::size_t c) const;
  RMatrix transpose() const;
  bool is_zero() const;

  RVector apply(const RVector& x) const;
  /// Rows of `top` followed by rows of `bottom`.
  static RMatrix vstack(const RMatrix& top, const RMatrix& bottom);

  friend RMatrix operator*(const RMatrix& a, const RMatrix& b);
  friend RMatrix operator*(const Rational& c, const RMatrix& a);
  bool operator==(const RMatrix& other) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct Echelon {
  RMatrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(RMatrix m);
std::size_t rank(const RMatrix& m);
/// Throws InvalidInput on singular or non-square input.
RMatrix inverse(const RMatrix& m);

class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Span of the given vectors (each of length ambient_dim).
  static Subspace span(std::size_t ambient_dim, const std::vector<RVector>& vectors);
  /// Span of the rows of m.
  static Subspace row_space(const RMatrix& m);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim_; }
  const RMatrix& basis() const { return basis_; }
  std::vector<RVector> basis_vectors() const;
  bool contains_vector(const RVector& x) const;

  bool operator==(const Subspace& other) const = default;
  std::string to_string() const;

 private:
  std::size_t ambient_dim_ = 0;
  RMatrix basis_;
};

Subspace kernel(const RMatrix& m);
Subspace image(const RMatrix& m);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// {x : m x in b}.
Subspace preimage(const RMatrix& m, const Subspace& b);
/// True iff b is a subspace of a.
bool contains(const Subspace& a, const Subspace& b);
/// Image of a subspace under m.
Subspace push_forward(const RMatrix& m, const Subspace& a);

/// Complement of a obtained by appending standard unit vectors in ascending
/// index order whenever they are independent of what was collected so far.
Subspace complement(const Subspace& a);
/// Complement of a inside b, extending a by b's echelon rows in order.
Subspace complement_within(const Subspace& a, const Subspace& b);

/// Coefficients y with sum_j y_j rows_j = x, when x lies in the row span.
std::optional<RVector> row_coordinates(const RMatrix& rows, const RVector& x);

/// Coordinates of x modulo w, in the basis of complement(w).
RVector quotient_coordinates(const Subspace& w, const RVector& x);
/// Representative in complement(w) of quotient coordinates y.
RVector quotient_lift(const Subspace& w, const RVector& y);

/// Matrix of the map induced by m from V/w_src to V'/w_dst, both quotients
/// realized on the deterministic complements. Throws PreconditionFailed if
/// m(w_src) is not inside w_dst.
RMatrix quotient_matrix(const RMatrix& m, const Subspace& w_src, const Subspace& w_dst);

/// Restriction of m to a -> b in the echelon bases of a and b. Throws
/// PreconditionFailed if m(a) is not inside b.
RMatrix restrict_matrix(const RMatrix& m, const Subspace& a, const Subspace& b);

/// Outcome of comparing two matrices up to a nonzero scalar.
struct Proportionality {
  enum class Kind { Scalar, BothZero, None };
  Kind kind = Kind::None;
  Rational scalar;  // meaningful for Kind::Scalar; a = scalar * b

  bool holds() const { return kind != Kind::None; }
};

Proportionality proportional_nonzero(const RMatrix& a, const RMatrix& b);

/// Solves a x = b; returns nullopt when inconsistent. Free variables are 0.
std::optional<RVector> solve(const RMatrix& a, const RVector& b);

}  // namespace linkednets
