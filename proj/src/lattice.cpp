#include "logmonoid/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace logmonoid {

// ---------------------------------------------------------------- vectors

Vector make_vector(std::initializer_list<long> values) {
  Vector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

Vector zero_vector(std::size_t n) { return Vector(n, Integer(0)); }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Integer& k, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = k * v[i];
  return r;
}

Integer dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer content(const Vector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

// ---------------------------------------------------------------- matrices

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidInput("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<Vector>& columns,
                                  std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InvalidInput("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::diagonal(const Vector& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Vector IntMatrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector IntMatrix::column(std::size_t j) const {
  Vector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Vector> IntMatrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::stack(const IntMatrix& below) const {
  if (rows_ == 0) {
    IntMatrix r = below;
    if (below.rows_ == 0) r.cols_ = std::max(cols_, below.cols_);
    return r;
  }
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) throw InvalidInput("stack: column mismatch");
  IntMatrix r(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), r.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            r.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return r;
}

IntMatrix IntMatrix::beside(const IntMatrix& right) const {
  if (rows_ != right.rows_) throw InvalidInput("beside: row mismatch");
  IntMatrix r(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) r(i, cols_ + j) = right(i, j);
  }
  return r;
}

IntMatrix IntMatrix::block_diagonal(const IntMatrix& other) const {
  IntMatrix r(rows_ + other.rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < other.rows_; ++i)
    for (std::size_t j = 0; j < other.cols_; ++j)
      r(rows_ + i, cols_ + j) = other(i, j);
  return r;
}

IntMatrix IntMatrix::submatrix(std::size_t row0, std::size_t rows,
                               std::size_t col0, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_)
    throw InvalidInput("submatrix out of range");
  IntMatrix r(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = (*this)(row0 + i, col0 + j);
  return r;
}

Vector IntMatrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw InvalidInput("apply: dimension mismatch");
  Vector y(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

Vector IntMatrix::apply_left(const Vector& x) const {
  if (x.size() != rows_) throw InvalidInput("apply_left: dimension mismatch");
  Vector y(cols_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j) y[j] += x[i] * (*this)(i, j);
  }
  return y;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_column_multiple(std::size_t dst, std::size_t src,
                                    const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_column(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw InvalidInput("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t IntMatrix::rank() const {
  std::vector<std::vector<Rational>> a(rows_, std::vector<Rational>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) a[i][j] = (*this)(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && a[p][c] == 0) ++p;
    if (p == rows_) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols_; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ",";
    os << logmonoid::to_string(row(i));
  }
  os << "]";
  return os.str();
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix product: dimension mismatch");
  IntMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InvalidInput("matrix sum: dimension mismatch");
  IntMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InvalidInput("matrix difference: dimension mismatch");
  IntMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

IntMatrix operator*(const Integer& k, const IntMatrix& m) {
  IntMatrix r = m;
  for (auto& x : r.data_) x *= k;
  return r;
}

// ---------------------------------------------------------------- normal forms

Vector SmithForm::diagonal() const {
  Vector out;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
  return out;
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_mod(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  s.d = m;
  s.u = IntMatrix::identity(rows);
  s.v = IntMatrix::identity(cols);
  s.v_inverse = IntMatrix::identity(cols);
  IntMatrix& d = s.d;

  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
    d.add_row_multiple(dst, src, k);
    s.u.add_row_multiple(dst, src, k);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
    d.add_column_multiple(dst, src, k);
    s.v.add_column_multiple(dst, src, k);
    s.v_inverse.add_row_multiple(src, dst, -k);
  };
  auto swap_r = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    s.u.swap_rows(a, b);
  };
  auto swap_c = [&](std::size_t a, std::size_t b) {
    d.swap_columns(a, b);
    s.v.swap_columns(a, b);
    s.v_inverse.swap_rows(a, b);
  };

  std::size_t t = 0;
  const std::size_t n = std::min(rows, cols);
  while (t < n) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    Integer best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const Integer& x = d(i, j);
        if (x == 0) continue;
        if (!found || abs(x) < best) {
          best = abs(x);
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    swap_r(t, pi);
    swap_c(t, pj);

    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i)
        if (d(i, t) != 0) row_op(i, t, -floor_div(d(i, t), d(t, t)));
      for (std::size_t j = t + 1; j < cols; ++j)
        if (d(t, j) != 0) col_op(j, t, -floor_div(d(t, j), d(t, t)));

      bool moved = false;
      Integer small = abs(d(t, t));
      std::size_t si = t, sj = t;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (d(i, t) != 0 && abs(d(i, t)) < small) {
          small = abs(d(i, t));
          si = i;
          sj = t;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (d(t, j) != 0 && abs(d(t, j)) < small) {
          small = abs(d(t, j));
          si = t;
          sj = j;
        }
      if (si != t || sj != t) {
        if (si != t) swap_r(t, si);
        if (sj != t) swap_c(t, sj);
        moved = true;
      }
      if (moved) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (floor_mod(d(i, j), d(t, t)) != 0) {
            row_op(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
    ++t;
  }
  s.rank = t;
  return s;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  const std::size_t rows = h.rows();
  const std::size_t cols = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      std::size_t p = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (h(i, c) != 0 && (p == rows || abs(h(i, c)) < abs(h(p, c)))) p = i;
      if (p == rows) break;
      h.swap_rows(r, p);
      bool clear = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        h.add_row_multiple(i, r, -floor_div(h(i, c), h(r, c)));
        if (h(i, c) != 0) clear = false;
      }
      if (clear) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) h.negate_row(r);
    for (std::size_t i = 0; i < r; ++i)
      h.add_row_multiple(i, r, -floor_div(h(i, c), h(r, c)));
    ++r;
  }
  return h.submatrix(0, r, 0, cols);
}

IntMatrix left_kernel(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  return s.u.submatrix(s.rank, m.rows() - s.rank, 0, m.rows());
}

IntMatrix right_kernel(const IntMatrix& m) { return left_kernel(m.transpose()); }

IntMatrix saturated_span(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  return s.v_inverse.submatrix(0, s.rank, 0, m.cols());
}

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& basis,
                                                    const Vector& target) {
  // c * basis = target  <=>  basis^T c = target.
  const std::size_t unknowns = basis.rows();
  const std::size_t equations = basis.cols();
  if (target.size() != equations) throw InvalidInput("solve_rational: dimension mismatch");
  std::vector<std::vector<Rational>> a(equations, std::vector<Rational>(unknowns + 1));
  for (std::size_t i = 0; i < equations; ++i) {
    for (std::size_t j = 0; j < unknowns; ++j) a[i][j] = basis(j, i);
    a[i][unknowns] = target[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < equations; ++c) {
    std::size_t p = r;
    while (p < equations && a[p][c] == 0) ++p;
    if (p == equations) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j <= unknowns; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < equations; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j <= unknowns; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < equations; ++i)
    if (a[i][unknowns] != 0) return std::nullopt;
  std::vector<Rational> x(unknowns, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][unknowns];
  return x;
}

// ---------------------------------------------------------------- structure

Integer GroupStructure::torsion_order() const {
  Integer o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

Integer GroupStructure::exponent() const {
  return invariant_factors.empty() ? Integer(1) : invariant_factors.back();
}

std::string GroupStructure::to_string() const {
  std::string s;
  if (free_rank > 0) s = "Z^" + std::to_string(free_rank);
  for (const auto& d : invariant_factors) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  return s.empty() ? "0" : s;
}

GroupStructure canonical_structure(std::size_t free_rank, const Vector& orders) {
  GroupStructure g;
  g.free_rank = free_rank;
  Vector nontrivial;
  for (const auto& o : orders) {
    if (o == 0)
      ++g.free_rank;
    else if (abs(o) != 1)
      nontrivial.push_back(abs(o));
  }
  if (nontrivial.empty()) return g;
  SmithForm s = smith_normal_form(IntMatrix::diagonal(nontrivial));
  for (const auto& d : s.diagonal())
    if (d >= 2) g.invariant_factors.push_back(d);
  return g;
}

namespace detail {

struct GroupData {
  std::size_t rank = 0;
  IntMatrix relations;
  IntMatrix hnf;
  std::vector<std::size_t> pivots;
  SmithForm snf;
  GroupStructure structure;
  std::vector<std::size_t> free_index;
  std::vector<std::size_t> torsion_index;
  Vector torsion_orders;
};

}  // namespace detail

FgAbelianGroup::FgAbelianGroup(std::size_t ambient_rank, const IntMatrix& relations) {
  IntMatrix rel = relations;
  if (rel.rows() == 0) rel = IntMatrix(0, ambient_rank);
  if (rel.cols() != ambient_rank)
    throw InvalidInput("relation matrix has " + std::to_string(rel.cols()) +
                       " columns, expected " + std::to_string(ambient_rank));
  auto data = std::make_shared<detail::GroupData>();
  data->rank = ambient_rank;
  data->relations = rel;
  data->hnf = hermite_normal_form(rel);
  for (std::size_t i = 0; i < data->hnf.rows(); ++i) {
    std::size_t c = 0;
    while (data->hnf(i, c) == 0) ++c;
    data->pivots.push_back(c);
  }
  data->snf = smith_normal_form(rel);
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    if (i < data->snf.rank) {
      const Integer& d = data->snf.d(i, i);
      if (d >= 2) {
        data->torsion_index.push_back(i);
        data->torsion_orders.push_back(d);
      }
    } else {
      data->free_index.push_back(i);
    }
  }
  data->structure.free_rank = data->free_index.size();
  data->structure.invariant_factors = data->torsion_orders;
  data_ = std::move(data);
}

FgAbelianGroup FgAbelianGroup::free(std::size_t rank) {
  return FgAbelianGroup(rank, IntMatrix(0, rank));
}

FgAbelianGroup FgAbelianGroup::cyclic(const Integer& n) {
  IntMatrix rel(1, 1);
  rel(0, 0) = n;
  return FgAbelianGroup(1, rel);
}

FgAbelianGroup FgAbelianGroup::direct_sum(const FgAbelianGroup& a,
                                          const FgAbelianGroup& b) {
  IntMatrix ra = a.relations();
  IntMatrix rb = b.relations();
  IntMatrix top = ra.beside(IntMatrix(ra.rows(), b.ambient_rank()));
  IntMatrix bottom = IntMatrix(rb.rows(), a.ambient_rank()).beside(rb);
  IntMatrix rel = top.rows() ? top.stack(bottom) : bottom;
  if (rel.rows() == 0) rel = IntMatrix(0, a.ambient_rank() + b.ambient_rank());
  return FgAbelianGroup(a.ambient_rank() + b.ambient_rank(), rel);
}

std::size_t FgAbelianGroup::ambient_rank() const { return data_->rank; }
const IntMatrix& FgAbelianGroup::relations() const { return data_->relations; }
const IntMatrix& FgAbelianGroup::relation_basis() const { return data_->hnf; }
const GroupStructure& FgAbelianGroup::structure() const { return data_->structure; }

GroupElement FgAbelianGroup::normalize(const Vector& v) const {
  if (v.size() != data_->rank)
    throw InvalidInput("vector of length " + std::to_string(v.size()) +
                       " in group of ambient rank " + std::to_string(data_->rank));
  Vector x = v;
  const IntMatrix& h = data_->hnf;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    const std::size_t c = data_->pivots[i];
    Integer q = floor_div(x[c], h(i, c));
    if (q == 0) continue;
    for (std::size_t j = c; j < data_->rank; ++j) x[j] -= q * h(i, j);
  }
  return GroupElement{std::move(x)};
}

GroupElement FgAbelianGroup::zero() const { return GroupElement{zero_vector(data_->rank)}; }

GroupElement FgAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  return normalize(a.coords + b.coords);
}

GroupElement FgAbelianGroup::subtract(const GroupElement& a, const GroupElement& b) const {
  return normalize(a.coords - b.coords);
}

GroupElement FgAbelianGroup::negate(const GroupElement& a) const {
  return normalize(Integer(-1) * a.coords);
}

GroupElement FgAbelianGroup::multiply(const Integer& k, const GroupElement& a) const {
  return normalize(k * a.coords);
}

GroupElement FgAbelianGroup::unit(std::size_t i) const {
  Vector e = zero_vector(data_->rank);
  e.at(i) = 1;
  return normalize(e);
}

bool FgAbelianGroup::in_relation_lattice(const Vector& v) const {
  return normalize(v).is_zero();
}

StructureCoordinates FgAbelianGroup::coordinates(const GroupElement& x) const {
  if (x.coords.size() != data_->rank) throw InvalidInput("coordinates: dimension mismatch");
  Vector y = data_->snf.v.apply_left(x.coords);
  StructureCoordinates c;
  for (std::size_t i : data_->free_index) c.free.push_back(y[i]);
  for (std::size_t k = 0; k < data_->torsion_index.size(); ++k)
    c.torsion.push_back(floor_mod(y[data_->torsion_index[k]], data_->torsion_orders[k]));
  return c;
}

GroupElement FgAbelianGroup::from_coordinates(const Vector& free,
                                              const Vector& torsion) const {
  if (free.size() != data_->free_index.size() ||
      torsion.size() != data_->torsion_index.size())
    throw InvalidInput("from_coordinates: dimension mismatch");
  Vector x = zero_vector(data_->rank);
  const IntMatrix& vi = data_->snf.v_inverse;
  for (std::size_t k = 0; k < free.size(); ++k) {
    if (free[k] == 0) continue;
    const std::size_t r = data_->free_index[k];
    for (std::size_t j = 0; j < data_->rank; ++j) x[j] += free[k] * vi(r, j);
  }
  for (std::size_t k = 0; k < torsion.size(); ++k) {
    if (torsion[k] == 0) continue;
    const std::size_t r = data_->torsion_index[k];
    for (std::size_t j = 0; j < data_->rank; ++j) x[j] += torsion[k] * vi(r, j);
  }
  return normalize(x);
}

Vector FgAbelianGroup::free_coordinate_functional(std::size_t i) const {
  return data_->snf.v.column(data_->free_index.at(i));
}

std::optional<Integer> FgAbelianGroup::element_order(const GroupElement& x) const {
  StructureCoordinates c = coordinates(x);
  if (!logmonoid::is_zero(c.free)) return std::nullopt;
  Integer order = 1;
  for (std::size_t k = 0; k < c.torsion.size(); ++k) {
    const Integer& d = data_->torsion_orders[k];
    Integer q = d / gcd(d, c.torsion[k]);
    mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), q.get_mpz_t());
  }
  return order;
}

std::vector<GroupElement> FgAbelianGroup::torsion_generators() const {
  std::vector<GroupElement> gens;
  const std::size_t t = data_->torsion_index.size();
  for (std::size_t k = 0; k < t; ++k) {
    Vector tors = zero_vector(t);
    tors[k] = 1;
    gens.push_back(from_coordinates(zero_vector(data_->free_index.size()), tors));
  }
  return gens;
}

std::vector<GroupElement> FgAbelianGroup::torsion_elements(std::size_t limit) const {
  const Integer order = data_->structure.torsion_order();
  if (order > Integer(static_cast<unsigned long>(limit)))
    throw InvalidInput("torsion subgroup of order " + order.get_str() +
                       " is too large to enumerate");
  const std::size_t t = data_->torsion_index.size();
  std::vector<GroupElement> out;
  Vector digits = zero_vector(t);
  const Vector free0 = zero_vector(data_->free_index.size());
  for (;;) {
    out.push_back(from_coordinates(free0, digits));
    std::size_t k = 0;
    for (; k < t; ++k) {
      digits[k] += 1;
      if (digits[k] < data_->torsion_orders[k]) break;
      digits[k] = 0;
    }
    if (k == t) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string FgAbelianGroup::to_string() const {
  return "Z^" + std::to_string(data_->rank) + "/" + data_->hnf.to_string();
}

bool operator==(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->rank == b.data_->rank && a.data_->hnf == b.data_->hnf;
}

TorsionSubgroup torsion_subgroup(const FgAbelianGroup& a) {
  TorsionSubgroup t;
  t.generators = a.torsion_generators();
  t.structure.invariant_factors = a.structure().invariant_factors;
  return t;
}

GroupStructure structure(const FgAbelianGroup& a) { return a.structure(); }

GroupElement normalize(const FgAbelianGroup& a, const Vector& v) { return a.normalize(v); }

std::optional<Integer> element_order(const FgAbelianGroup& a, const GroupElement& x) {
  return a.element_order(x);
}

// ---------------------------------------------------------------- homomorphisms

GroupHom::GroupHom(FgAbelianGroup src, FgAbelianGroup tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
  if (matrix.rows() == 0 && matrix.cols() == 0)
    matrix = IntMatrix(target.ambient_rank(), source.ambient_rank());
  if (matrix.rows() != target.ambient_rank() || matrix.cols() != source.ambient_rank())
    throw InvalidInput("map matrix is " + std::to_string(matrix.rows()) + "x" +
                       std::to_string(matrix.cols()) + ", expected " +
                       std::to_string(target.ambient_rank()) + "x" +
                       std::to_string(source.ambient_rank()));
}

GroupElement GroupHom::operator()(const GroupElement& x) const {
  return target.normalize(matrix.apply(x.coords));
}

bool GroupHom::is_well_defined() const {
  const IntMatrix& rel = source.relations();
  for (std::size_t i = 0; i < rel.rows(); ++i)
    if (!target.in_relation_lattice(matrix.apply(rel.row(i)))) return false;
  return true;
}

void GroupHom::require_well_defined() const {
  if (!is_well_defined()) throw InvalidInput("relations not respected");
}

Cokernel cokernel(const GroupHom& f) {
  f.require_well_defined();
  IntMatrix images = f.matrix.transpose();
  IntMatrix rel = f.target.relations().stack(images);
  if (rel.rows() == 0) rel = IntMatrix(0, f.target.ambient_rank());
  FgAbelianGroup q(f.target.ambient_rank(), rel);
  return Cokernel{q, GroupHom(f.target, q, IntMatrix::identity(f.target.ambient_rank()))};
}

std::vector<Vector> kernel_generators(const GroupHom& f) {
  f.require_well_defined();
  const std::size_t ks = f.source.ambient_rank();
  IntMatrix system = f.matrix.transpose().stack(f.target.relations());
  if (system.cols() != f.target.ambient_rank())
    system = IntMatrix(system.rows(), f.target.ambient_rank());
  IntMatrix lk = left_kernel(system);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < lk.rows(); ++i) {
    Vector row = lk.row(i);
    Vector x(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(ks));
    if (!f.source.in_relation_lattice(x)) out.push_back(f.source.normalize(x).coords);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool kernel_is_trivial(const GroupHom& f) { return kernel_generators(f).empty(); }

GroupStructure tensor_cyclic(const GroupStructure& a, const Integer& n) {
  if (n < 1) throw InvalidInput("cyclic order must be >= 1");
  Vector orders(a.free_rank, n);
  for (const auto& d : a.invariant_factors) orders.push_back(gcd(d, n));
  return canonical_structure(0, orders);
}

GroupStructure hom_to_cyclic(const GroupStructure& a, const Integer& n) {
  return tensor_cyclic(a, n);
}

GroupStructure hom_to_cyclic(const FgAbelianGroup& a, const Integer& n) {
  return hom_to_cyclic(a.structure(), n);
}

GroupStructure ext1(const GroupStructure& a, const GroupStructure& b) {
  Vector orders;
  for (const auto& d : a.invariant_factors) {
    for (std::size_t i = 0; i < b.free_rank; ++i) orders.push_back(d);
    for (const auto& e : b.invariant_factors) orders.push_back(gcd(d, e));
  }
  return canonical_structure(0, orders);
}

GroupStructure hom_group(const GroupStructure& a, const GroupStructure& b) {
  Vector orders;
  for (std::size_t i = 0; i < a.free_rank; ++i)
    for (const auto& e : b.invariant_factors) orders.push_back(e);
  for (const auto& d : a.invariant_factors)
    for (const auto& e : b.invariant_factors) orders.push_back(gcd(d, e));
  return canonical_structure(a.free_rank * b.free_rank, orders);
}

// ---------------------------------------------------------------- subgroups

SubgroupSolver::SubgroupSolver(const FgAbelianGroup& group, std::vector<Vector> generators)
    : generators_(std::move(generators)), ambient_rank_(group.ambient_rank()) {
  IntMatrix g = IntMatrix::from_rows(generators_, ambient_rank_);
  IntMatrix system = g.stack(group.relations());
  if (system.cols() != ambient_rank_) system = IntMatrix(system.rows(), ambient_rank_);
  snf_ = smith_normal_form(system);
  const std::size_t m = generators_.size();
  const std::size_t total = system.rows();
  std::vector<Vector> rels;
  for (std::size_t i = snf_.rank; i < total; ++i) {
    Vector row = snf_.u.row(i);
    Vector c(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(m));
    if (!logmonoid::is_zero(c)) rels.push_back(std::move(c));
  }
  relation_module_ = rels.empty() ? IntMatrix(0, m)
                                  : hermite_normal_form(IntMatrix::from_rows(rels, m));
}

std::optional<Vector> SubgroupSolver::solve(const Vector& t) const {
  if (t.size() != ambient_rank_) throw InvalidInput("solve: dimension mismatch");
  const std::size_t total = snf_.u.rows();
  Vector tv = snf_.v.apply_left(t);
  Vector z = zero_vector(total);
  for (std::size_t i = 0; i < ambient_rank_; ++i) {
    if (i < snf_.rank) {
      const Integer& d = snf_.d(i, i);
      if (floor_mod(tv[i], d) != 0) return std::nullopt;
      z[i] = tv[i] / d;
    } else if (tv[i] != 0) {
      return std::nullopt;
    }
  }
  Vector y = snf_.u.apply_left(z);
  return Vector(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(generators_.size()));
}

SubgroupHull::SubgroupHull(const FgAbelianGroup& ambient, const std::vector<Vector>& gens)
    : group(FgAbelianGroup::free(0)),
      inclusion(IntMatrix::from_columns(gens, ambient.ambient_rank())),
      solver(ambient, gens),
      ambient_(ambient) {
  group = FgAbelianGroup(gens.size(), solver.relation_module());
}

std::optional<GroupElement> SubgroupHull::to_hull(const Vector& x) const {
  auto c = solver.solve(x);
  if (!c) return std::nullopt;
  return group.normalize(*c);
}

Vector SubgroupHull::to_ambient(const GroupElement& h) const {
  return ambient_.normalize(inclusion.apply(h.coords)).coords;
}

}  // namespace logmonoid
