#pragma once

// Exact integer linear algebra on Z^n and integer-point enumeration in
// rational polyhedra. Nothing in here touches floating point.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/error.hpp"

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;

/// A lattice vector. N and M are both identified with Z^n through the
/// standard dot pairing, so one type serves for both.
using IntVector = std::vector<Integer>;

inline IntVector ivec(std::initializer_list<long> xs) {
  IntVector v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

inline Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::DimensionMismatch, "pairing of vectors of different length");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

/// gcd of the coordinates; zero for the zero vector.
inline Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

inline bool is_primitive(const IntVector& v) { return content(v) == 1; }

inline IntVector primitive(const IntVector& v) {
  Integer g = content(v);
  if (g == 0) throw Error(ErrorKind::ZeroVector, "primitive() of the zero vector");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

inline IntVector negated(const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

inline IntVector scaled(const IntVector& v, const Integer& k) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * k;
  return out;
}

inline IntVector difference(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "difference of vectors of different length");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline IntVector unit_vector(std::size_t dim, std::size_t i) {
  IntVector v(dim, Integer(0));
  v[i] = 1;
  return v;
}

// ---------------------------------------------------------------------------
// IntMatrix

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, IntVector(cols, Integer(0))) {}

  /// Rows must share one length; `cols` is only consulted when `rows` is empty.
  static IntMatrix from_rows(std::vector<IntVector> rows, std::size_t cols = 0) {
    IntMatrix m;
    m.cols_ = rows.empty() ? cols : rows.front().size();
    for (const auto& r : rows)
      if (r.size() != m.cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    m.rows_ = std::move(rows);
    return m;
  }

  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows = 0) {
    return from_rows(columns, rows).transposed();
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i][i] = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows() == cols(); }

  Integer& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  const IntVector& row(std::size_t i) const { return rows_[i]; }
  const std::vector<IntVector>& row_vectors() const noexcept { return rows_; }

  IntVector column(std::size_t j) const {
    IntVector c(rows());
    for (std::size_t i = 0; i < rows(); ++i) c[i] = rows_[i][j];
    return c;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols(), rows());
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j) t.rows_[j][i] = rows_[i][j];
    return t;
  }

  IntVector operator*(const IntVector& v) const {
    if (v.size() != cols()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    IntVector out(rows());
    for (std::size_t i = 0; i < rows(); ++i) out[i] = dot(rows_[i], v);
    return out;
  }

  IntMatrix operator*(const IntMatrix& other) const {
    if (cols() != other.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    IntMatrix out(rows(), other.cols());
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t k = 0; k < cols(); ++k) {
        if (rows_[i][k] == 0) continue;
        for (std::size_t j = 0; j < other.cols(); ++j) out.rows_[i][j] += rows_[i][k] * other.rows_[k][j];
      }
    return out;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }
  void swap_cols(std::size_t a, std::size_t b) {
    for (auto& r : rows_) std::swap(r[a], r[b]);
  }
  /// row[target] += factor * row[source]
  void add_row(std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t j = 0; j < cols_; ++j) rows_[target][j] += factor * rows_[source][j];
  }
  /// col[target] += factor * col[source]
  void add_col(std::size_t target, std::size_t source, const Integer& factor) {
    for (auto& r : rows_) r[target] += factor * r[source];
  }
  void negate_row(std::size_t i) {
    for (auto& x : rows_[i]) x = -x;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<IntVector> rows_;
};

inline std::string to_string(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ",";
    s += to_string(m.row(i));
  }
  return s + "]";
}

/// Fraction-free (Bareiss) elimination.
inline Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<IntVector> a = m.row_vectors();
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace detail {

using RationalRow = std::vector<Rational>;

struct RowEchelon {
  std::vector<RationalRow> rows;      // reduced rows, one per pivot
  std::vector<std::size_t> pivots;    // pivot column of each row
};

/// Reduced row echelon form over Q.
inline RowEchelon rref(const std::vector<IntVector>& input, std::size_t dim) {
  std::vector<RationalRow> a;
  a.reserve(input.size());
  for (const auto& r : input) {
    if (r.size() != dim) throw Error(ErrorKind::DimensionMismatch, "row of wrong length");
    RationalRow q(dim);
    for (std::size_t j = 0; j < dim; ++j) q[j] = r[j];
    a.push_back(std::move(q));
  }
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < dim; ++j) a[i][j] -= f * a[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

inline IntVector clear_denominators(const RationalRow& q) {
  Integer l = 1;
  for (const auto& x : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector v(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    Rational s = q[i] * l;
    v[i] = s.get_num();
  }
  return v;
}

}  // namespace detail

inline std::size_t rank(const std::vector<IntVector>& rows, std::size_t dim) {
  return detail::rref(rows, dim).pivots.size();
}

inline std::size_t rank(const IntMatrix& m) { return rank(m.row_vectors(), m.cols()); }

/// Primitive integer vectors spanning {x : <row, x> = 0 for every row}.
/// One vector per free column of the reduced echelon form, in column order.
inline std::vector<IntVector> kernel_basis(const std::vector<IntVector>& rows, std::size_t dim) {
  detail::RowEchelon e = detail::rref(rows, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    detail::RationalRow x(dim, Rational(0));
    x[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(primitive(detail::clear_denominators(x)));
  }
  return basis;
}

/// Inverse of a unimodular matrix, exact.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "inverse of a non-square matrix");
  Integer det = determinant(m);
  if (abs(det) != 1)
    throw Error(ErrorKind::NotUnimodular, "determinant " + det.get_str() + " is not +-1");
  const std::size_t n = m.rows();
  // Row-reduce [m | I]; with |det| = 1 the right half ends up integral.
  std::vector<IntVector> aug(n, IntVector(2 * n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m(i, j);
    aug[i][n + i] = 1;
  }
  detail::RowEchelon e = detail::rref(aug, 2 * n);
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& q = e.rows[i][n + j];
      if (q.get_den() != 1) throw Error(ErrorKind::NotUnimodular, "non-integral inverse");
      inv(i, j) = q.get_num();
    }
  return inv;
}

/// Given a lattice basis p_1..p_n, returns q_1..q_n with <p_i, q_j> = delta_ij.
inline std::vector<IntVector> dual_basis(const std::vector<IntVector>& basis) {
  const std::size_t n = basis.size();
  IntMatrix p = IntMatrix::from_rows(basis, n);
  if (!p.square()) throw Error(ErrorKind::NotSquare, "a basis needs as many vectors as the dimension");
  // P Q^T = I  =>  Q = (P^{-1})^T, i.e. q_j is column j of P^{-1}.
  IntMatrix inv = unimodular_inverse(p);
  std::vector<IntVector> q;
  q.reserve(n);
  for (std::size_t j = 0; j < n; ++j) q.push_back(inv.column(j));
  return q;
}

// ---------------------------------------------------------------------------
// Normal forms

struct SmithForm {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // diagonal, d_i | d_{i+1}, nonnegative
  IntMatrix V;  // cols x cols, unimodular
};

/// U * m * V = D.
inline SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm s{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
  IntMatrix& D = s.D;
  const std::size_t limit = std::min(rows, cols);

  for (std::size_t t = 0; t < limit; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (D(i, j) != 0 && (!best || abs(D(i, j)) < abs(D(best->first, best->second)))) best = {i, j};
      if (!best) break;
      if (best->first != t) {
        D.swap_rows(t, best->first);
        s.U.swap_rows(t, best->first);
      }
      if (best->second != t) {
        D.swap_cols(t, best->second);
        s.V.swap_cols(t, best->second);
      }

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        Integer nq = -q;
        D.add_row(i, t, nq);
        s.U.add_row(i, t, nq);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        Integer nq = -q;
        D.add_col(j, t, nq);
        s.V.add_col(j, t, nq);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row/column t are clear; enforce the divisibility chain.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < rows && !offending; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
      if (!offending) break;
      D.add_row(t, *offending, Integer(1));
      s.U.add_row(t, *offending, Integer(1));
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

/// Row-style Hermite normal form: the unique matrix H = W * m (W unimodular)
/// in row echelon form with positive pivots, entries above each pivot reduced
/// into [0, pivot), and zero rows last.
inline IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    while (true) {
      std::optional<std::size_t> pivot;
      for (std::size_t i = r; i < h.rows(); ++i)
        if (h(i, c) != 0 && (!pivot || abs(h(i, c)) < abs(h(*pivot, c)))) pivot = i;
      if (!pivot) break;
      h.swap_rows(r, *pivot);
      bool done = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        h.add_row(i, r, Integer(-q));
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) h.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (q != 0) h.add_row(i, r, Integer(-q));
    }
    ++r;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Inequality systems and lattice-point enumeration

enum class Relation { GreaterEqual, Equal };

/// <normal, x> >= rhs   or   <normal, x> = rhs
struct Constraint {
  IntVector normal;
  Relation relation = Relation::GreaterEqual;
  Integer rhs = 0;
};

class InequalitySystem {
 public:
  explicit InequalitySystem(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }

  InequalitySystem& add(IntVector normal, Relation relation, Integer rhs) {
    if (normal.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "constraint normal has wrong length");
    constraints_.push_back({std::move(normal), relation, std::move(rhs)});
    return *this;
  }
  InequalitySystem& add_greater_equal(IntVector normal, Integer rhs) {
    return add(std::move(normal), Relation::GreaterEqual, std::move(rhs));
  }
  InequalitySystem& add_equal(IntVector normal, Integer rhs) {
    return add(std::move(normal), Relation::Equal, std::move(rhs));
  }

  bool satisfied_by(const IntVector& x) const {
    for (const auto& c : constraints_) {
      Integer v = dot(c.normal, x);
      if (c.relation == Relation::Equal ? v != c.rhs : v < c.rhs) return false;
    }
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<Constraint> constraints_;
};

/// Result of enumerating the integer points of a polyhedron. When the
/// rational polyhedron is unbounded no points are listed.
struct LatticePoints {
  bool unbounded = false;
  std::vector<IntVector> points;  // strictly increasing lexicographic order
};

namespace detail {

// a.x >= b, or a.x = b when eq.
struct FmRow {
  IntVector a;
  Integer b;
  bool eq = false;

  friend bool operator<(const FmRow& l, const FmRow& r) {
    if (l.eq != r.eq) return l.eq < r.eq;
    if (l.a != r.a) return l.a < r.a;
    return l.b < r.b;
  }
  friend bool operator==(const FmRow& l, const FmRow& r) { return l.eq == r.eq && l.a == r.a && l.b == r.b; }
};

inline void normalize(FmRow& row) {
  Integer g = content(row.a);
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row.b.get_mpz_t());
  if (g > 1) {
    for (auto& x : row.a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(row.b.get_mpz_t(), row.b.get_mpz_t(), g.get_mpz_t());
  }
  if (row.eq) {
    auto nz = std::find_if(row.a.begin(), row.a.end(), [](const Integer& x) { return x != 0; });
    if (nz != row.a.end() && *nz < 0) {
      for (auto& x : row.a) x = -x;
      row.b = -row.b;
    }
  }
}

/// Drops tautologies and duplicates; nullopt when a constant row is violated.
inline std::optional<std::vector<FmRow>> tidy(std::vector<FmRow> rows) {
  std::vector<FmRow> out;
  out.reserve(rows.size());
  for (auto& r : rows) {
    if (is_zero(r.a)) {
      bool ok = r.eq ? r.b == 0 : r.b <= 0;
      if (!ok) return std::nullopt;
      continue;
    }
    normalize(r);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Fourier-Motzkin elimination of variable k. Equations involving x_k are
/// used for substitution first, which keeps the systems small.
inline std::optional<std::vector<FmRow>> eliminate(const std::vector<FmRow>& rows, std::size_t k) {
  std::vector<FmRow> out;
  auto pivot = std::find_if(rows.begin(), rows.end(), [k](const FmRow& r) { return r.eq && r.a[k] != 0; });
  if (pivot != rows.end()) {
    const FmRow& e = *pivot;
    Integer c = abs(e.a[k]);
    int s = sgn(e.a[k]);
    for (auto it = rows.begin(); it != rows.end(); ++it) {
      if (it == pivot) continue;
      if (it->a[k] == 0) {
        out.push_back(*it);
        continue;
      }
      Integer f = s * it->a[k];
      FmRow r{IntVector(it->a.size()), c * it->b - f * e.b, it->eq};
      for (std::size_t j = 0; j < r.a.size(); ++j) r.a[j] = c * it->a[j] - f * e.a[j];
      out.push_back(std::move(r));
    }
    return tidy(std::move(out));
  }

  std::vector<const FmRow*> pos, neg;
  for (const auto& r : rows) {
    if (r.a[k] > 0) pos.push_back(&r);
    else if (r.a[k] < 0) neg.push_back(&r);
    else out.push_back(r);
  }
  for (const FmRow* p : pos)
    for (const FmRow* q : neg) {
      Integer fp = -q->a[k];
      const Integer& fq = p->a[k];
      FmRow r{IntVector(p->a.size()), fp * p->b + fq * q->b, false};
      for (std::size_t j = 0; j < r.a.size(); ++j) r.a[j] = fp * p->a[j] + fq * q->a[j];
      out.push_back(std::move(r));
    }
  return tidy(std::move(out));
}

inline bool rationally_feasible(std::vector<FmRow> rows, std::size_t dim) {
  auto cur = tidy(std::move(rows));
  for (std::size_t k = 0; k < dim && cur; ++k) cur = eliminate(*cur, k);
  return cur.has_value();
}

inline std::vector<FmRow> rows_of(const InequalitySystem& sys) {
  std::vector<FmRow> rows;
  for (const auto& c : sys.constraints()) rows.push_back({c.normal, c.rhs, c.relation == Relation::Equal});
  return rows;
}

/// True when the recession cone {A x >= 0, C x = 0} contains a nonzero vector.
/// Scale invariance lets us test each half-space s*x_i >= 1 separately.
inline bool has_recession_direction(const std::vector<FmRow>& rows, std::size_t dim) {
  std::vector<FmRow> homogeneous = rows;
  for (auto& r : homogeneous) r.b = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (int s : {1, -1}) {
      std::vector<FmRow> probe = homogeneous;
      IntVector a(dim, Integer(0));
      a[i] = s;
      probe.push_back({std::move(a), Integer(1), false});
      if (rationally_feasible(std::move(probe), dim)) return true;
    }
  return false;
}

struct Interval {
  Integer lo, hi;
  bool empty() const { return lo > hi; }
};

/// Integer range of x_j over the projection of `rows`; variables before j
/// must already be substituted out. The system is known to be bounded.
inline std::optional<Interval> integer_range(const std::vector<FmRow>& rows, std::size_t j, std::size_t dim) {
  std::optional<std::vector<FmRow>> cur = rows;
  for (std::size_t k = dim; k-- > j + 1 && cur;) cur = eliminate(*cur, k);
  if (!cur) return std::nullopt;
  std::optional<Integer> lo, hi;
  auto raise = [&](const Integer& v) { if (!lo || v > *lo) lo = v; };
  auto lower = [&](const Integer& v) { if (!hi || v < *hi) hi = v; };
  for (const auto& r : *cur) {
    const Integer& a = r.a[j];
    if (r.eq) {
      if (!mpz_divisible_p(r.b.get_mpz_t(), a.get_mpz_t())) return std::nullopt;
      Integer v;
      mpz_divexact(v.get_mpz_t(), r.b.get_mpz_t(), a.get_mpz_t());
      raise(v);
      lower(v);
    } else if (a > 0) {
      Integer v;
      mpz_cdiv_q(v.get_mpz_t(), r.b.get_mpz_t(), a.get_mpz_t());
      raise(v);
    } else {
      Integer v;
      mpz_fdiv_q(v.get_mpz_t(), r.b.get_mpz_t(), a.get_mpz_t());
      lower(v);
    }
  }
  if (!lo || !hi) throw Error(ErrorKind::InvalidInput, "enumeration reached an unbounded coordinate");
  return Interval{*lo, *hi};
}

inline void enumerate(const std::vector<FmRow>& rows, std::size_t j, std::size_t dim, IntVector& prefix,
                      std::vector<IntVector>& out) {
  if (j == dim) {
    out.push_back(prefix);
    return;
  }
  auto range = integer_range(rows, j, dim);
  if (!range || range->empty()) return;
  for (Integer v = range->lo; v <= range->hi; ++v) {
    std::vector<FmRow> fixed = rows;
    for (auto& r : fixed) {
      if (r.a[j] == 0) continue;
      r.b -= r.a[j] * v;
      r.a[j] = 0;
    }
    auto next = tidy(std::move(fixed));
    if (!next) continue;
    prefix[j] = v;
    enumerate(*next, j + 1, dim, prefix, out);
  }
}

}  // namespace detail

inline bool is_feasible(const InequalitySystem& sys) {
  return detail::rationally_feasible(detail::rows_of(sys), sys.dim());
}

/// True iff the rational polyhedron is empty or has a trivial recession cone.
inline bool is_bounded(const InequalitySystem& sys) {
  auto rows = detail::rows_of(sys);
  if (!detail::rationally_feasible(rows, sys.dim())) return true;
  return !detail::has_recession_direction(rows, sys.dim());
}

/// All integer points of a bounded polyhedron in lexicographic order, or the
/// Unbounded marker. Bounds per coordinate come from Fourier-Motzkin
/// projection; points are produced by recursive descent over coordinates.
inline LatticePoints lattice_points(const InequalitySystem& sys) {
  const std::size_t dim = sys.dim();
  auto rows = detail::tidy(detail::rows_of(sys));
  LatticePoints result;
  if (!rows || !detail::rationally_feasible(*rows, dim)) return result;
  if (detail::has_recession_direction(*rows, dim)) {
    result.unbounded = true;
    return result;
  }
  IntVector prefix(dim, Integer(0));
  detail::enumerate(*rows, 0, dim, prefix, result.points);
  return result;
}

}  // namespace toric
