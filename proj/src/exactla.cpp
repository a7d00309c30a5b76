#include "linkednets/exactla.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "linkednets/errors.hpp"

namespace linkednets {

namespace {

bool is_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw InvalidInput("subspaces live in different ambient spaces (" + std::to_string(a.ambient_dim()) +
                       " vs " + std::to_string(b.ambient_dim()) + ")");
  }
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  std::size_t slash = text.find('/');
  bool ok = slash == std::string::npos ? is_digits(text, start, text.size())
                                       : is_digits(text, start, slash) && is_digits(text, slash + 1, text.size());
  if (!ok) throw InvalidInput("not a rational literal: '" + text + "'");
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q;
  if (slash == std::string::npos) {
    q = Rational(mpz_class(body, 10));
  } else {
    std::size_t s = body.find('/');
    mpz_class num(body.substr(0, s), 10);
    mpz_class den(body.substr(s + 1), 10);
    if (den == 0) throw InvalidInput("zero denominator in '" + text + "'");
    q = Rational(num, den);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// RMatrix

RMatrix::RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

RMatrix::RMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RMatrix RMatrix::identity(std::size_t n) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RMatrix RMatrix::from_rows(const std::vector<RVector>& rows, std::size_t cols) {
  RMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RMatrix RMatrix::from_columns(const std::vector<RVector>& columns, std::size_t rows) {
  RMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InvalidInput("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RVector RMatrix::row(std::size_t r) const {
  return RVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RVector RMatrix::column(std::size_t c) const {
  RVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RMatrix RMatrix::transpose() const {
  RMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RVector RMatrix::apply(const RVector& x) const {
  if (x.size() != cols_) throw InvalidInput("vector length does not match matrix columns");
  RVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

RMatrix RMatrix::vstack(const RMatrix& top, const RMatrix& bottom) {
  if (top.cols_ != bottom.cols_) throw InvalidInput("vstack column mismatch");
  RMatrix m(top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.entries_.begin(), top.entries_.end(), m.entries_.begin());
  std::copy(bottom.entries_.begin(), bottom.entries_.end(),
            m.entries_.begin() + static_cast<std::ptrdiff_t>(top.entries_.size()));
  return m;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw InvalidInput("cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " by " +
                       std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  RMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  }
  return m;
}

RMatrix operator*(const Rational& c, const RMatrix& a) {
  RMatrix m = a;
  for (auto& e : m.entries_) e *= c;
  return m;
}

bool RMatrix::operator==(const RMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::string RMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Echelon forms

Echelon rref(RMatrix m) {
  Echelon e;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead_row, j));
    }
    Rational inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(lead_row, j);
    }
    e.pivots.push_back(c);
    ++lead_row;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const RMatrix& m) { return rref(m).pivots.size(); }

RMatrix inverse(const RMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("inverse of a non-square matrix");
  std::size_t n = m.rows();
  RMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw InvalidInput("matrix is singular");
  RMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

std::optional<RVector> solve(const RMatrix& a, const RVector& b) {
  if (b.size() != a.rows()) throw InvalidInput("right-hand side length mismatch");
  RMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  Echelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  RVector x(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  return x;
}

// ---------------------------------------------------------------------------
// Subspaces

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = RMatrix(0, ambient_dim);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = RMatrix::identity(ambient_dim);
  return s;
}

Subspace Subspace::row_space(const RMatrix& m) {
  Echelon e = rref(m);
  Subspace s;
  s.ambient_dim_ = m.cols();
  s.basis_ = RMatrix(e.pivots.size(), m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s.basis_(r, c) = e.reduced(r, c);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<RVector>& vectors) {
  return row_space(RMatrix::from_rows(vectors, ambient_dim));
}

std::vector<RVector> Subspace::basis_vectors() const {
  std::vector<RVector> out;
  for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(basis_.row(r));
  return out;
}

bool Subspace::contains_vector(const RVector& x) const {
  if (x.size() != ambient_dim_) throw InvalidInput("vector length does not match ambient dimension");
  return rank(RMatrix::vstack(basis_, RMatrix::from_rows({x}, ambient_dim_))) == dim();
}

std::string Subspace::to_string() const {
  return "span" + basis_.to_string() + " in Q^" + std::to_string(ambient_dim_);
}

Subspace kernel(const RMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RVector> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RVector x(m.cols());
    x[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = -e.reduced(i, free);
    vectors.push_back(std::move(x));
  }
  return Subspace::span(m.cols(), vectors);
}

Subspace image(const RMatrix& m) { return Subspace::row_space(m.transpose()); }

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return Subspace::row_space(RMatrix::vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (a.is_zero() || b.is_full()) return a;
  if (b.is_zero() || a.is_full()) return b;
  // Annihilators add under intersection.
  Subspace ann_a = kernel(a.basis());
  Subspace ann_b = kernel(b.basis());
  return kernel(RMatrix::vstack(ann_a.basis(), ann_b.basis()));
}

Subspace preimage(const RMatrix& m, const Subspace& b) {
  if (m.rows() != b.ambient_dim()) throw InvalidInput("preimage: matrix rows do not match subspace ambient");
  Subspace ann_b = kernel(b.basis());
  return kernel(ann_b.basis() * m);
}

bool contains(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (b.dim() > a.dim()) return false;
  if (b.is_zero() || a.is_full()) return true;
  return rank(RMatrix::vstack(a.basis(), b.basis())) == a.dim();
}

Subspace push_forward(const RMatrix& m, const Subspace& a) {
  if (m.cols() != a.ambient_dim()) throw InvalidInput("push_forward: dimension mismatch");
  return Subspace::row_space((m * a.basis().transpose()).transpose());
}

namespace {

Subspace greedy_extend(const Subspace& a, const std::vector<RVector>& candidates) {
  std::size_t d = a.ambient_dim();
  RMatrix collected = a.basis();
  std::size_t current = a.dim();
  std::vector<RVector> chosen;
  for (const auto& c : candidates) {
    RMatrix trial = RMatrix::vstack(collected, RMatrix::from_rows({c}, d));
    if (rank(trial) > current) {
      collected = std::move(trial);
      ++current;
      chosen.push_back(c);
    }
  }
  return Subspace::span(d, chosen);
}

}  // namespace

Subspace complement(const Subspace& a) {
  std::size_t d = a.ambient_dim();
  std::vector<RVector> units;
  for (std::size_t j = 0; j < d; ++j) {
    RVector e(d);
    e[j] = 1;
    units.push_back(std::move(e));
  }
  return greedy_extend(a, units);
}

Subspace complement_within(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (!contains(b, a)) throw PreconditionFailed("complement_within: first subspace is not contained in the second");
  return greedy_extend(a, b.basis_vectors());
}

std::optional<RVector> row_coordinates(const RMatrix& rows, const RVector& x) {
  return solve(rows.transpose(), x);
}

RVector quotient_coordinates(const Subspace& w, const RVector& x) {
  Subspace c = complement(w);
  auto coords = row_coordinates(RMatrix::vstack(w.basis(), c.basis()), x);
  if (!coords) throw InconsistentPresentation("quotient_coordinates: vector outside ambient span");
  return RVector(coords->begin() + static_cast<std::ptrdiff_t>(w.dim()), coords->end());
}

RVector quotient_lift(const Subspace& w, const RVector& y) {
  Subspace c = complement(w);
  if (y.size() != c.dim()) throw InvalidInput("quotient_lift: coordinate length mismatch");
  RVector x(w.ambient_dim());
  for (std::size_t j = 0; j < c.dim(); ++j)
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[j] * c.basis()(j, i);
  return x;
}

RMatrix quotient_matrix(const RMatrix& m, const Subspace& w_src, const Subspace& w_dst) {
  if (m.cols() != w_src.ambient_dim() || m.rows() != w_dst.ambient_dim()) {
    throw InvalidInput("quotient_matrix: dimension mismatch");
  }
  if (!contains(w_dst, push_forward(m, w_src))) {
    throw PreconditionFailed("quotient_matrix: map does not carry the source subspace into the target subspace");
  }
  Subspace c_src = complement(w_src);
  Subspace c_dst = complement(w_dst);
  RMatrix q(c_dst.dim(), c_src.dim());
  for (std::size_t j = 0; j < c_src.dim(); ++j) {
    RVector y = quotient_coordinates(w_dst, m.apply(c_src.basis().row(j)));
    for (std::size_t i = 0; i < y.size(); ++i) q(i, j) = y[i];
  }
  return q;
}

RMatrix restrict_matrix(const RMatrix& m, const Subspace& a, const Subspace& b) {
  if (m.cols() != a.ambient_dim() || m.rows() != b.ambient_dim()) {
    throw InvalidInput("restrict_matrix: dimension mismatch");
  }
  RMatrix r(b.dim(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    auto y = row_coordinates(b.basis(), m.apply(a.basis().row(j)));
    if (!y) throw PreconditionFailed("restrict_matrix: image leaves the target subspace");
    for (std::size_t i = 0; i < y->size(); ++i) r(i, j) = (*y)[i];
  }
  return r;
}

Proportionality proportional_nonzero(const RMatrix& a, const RMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("proportional_nonzero: shape mismatch");
  bool az = a.is_zero();
  bool bz = b.is_zero();
  if (az && bz) return {Proportionality::Kind::BothZero, Rational(0)};
  if (az || bz) return {};
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      if (sgn(b(r, c)) == 0) continue;
      Rational k = a(r, c) / b(r, c);
      if (k * b == a) return {Proportionality::Kind::Scalar, k};
      return {};
    }
  }
  return {};
}

}  // namespace linkednets
