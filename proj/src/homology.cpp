#include "gt2/homology.hpp"

#include <algorithm>

namespace gt2 {

IntegerMatrix::IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
  entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), BigInt(0));
}

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void IntegerMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntegerMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntegerMatrix::negate_row(int r) {
  for (int c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
}

void IntegerMatrix::add_row(int a, int b, const BigInt& q) {
  for (int c = 0; c < cols_; ++c) at(a, c) += q * at(b, c);
}

void IntegerMatrix::add_col(int a, int b, const BigInt& q) {
  for (int r = 0; r < rows_; ++r) at(r, a) += q * at(r, b);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
  IntegerMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

std::vector<BigInt> SmithDecomposition::diagonal() const {
  std::vector<BigInt> out;
  int n = std::min(d.rows(), d.cols());
  for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
  return out;
}

namespace {

// Smallest non-zero |entry| in the trailing submatrix, ties row-major.
bool find_pivot(const IntegerMatrix& m, int t, int& pr, int& pc) {
  bool found = false;
  BigInt best;
  for (int r = t; r < m.rows(); ++r)
    for (int c = t; c < m.cols(); ++c) {
      const BigInt& e = m.at(r, c);
      if (e == 0) continue;
      BigInt a = abs(e);
      if (!found || a < best) {
        found = true;
        best = a;
        pr = r;
        pc = c;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  SmithDecomposition s;
  s.d = m;
  s.u = IntegerMatrix::identity(m.rows());
  s.v = IntegerMatrix::identity(m.cols());
  IntegerMatrix& d = s.d;

  int n = std::min(m.rows(), m.cols());
  for (int t = 0; t < n; ++t) {
    int pr, pc;
    if (!find_pivot(d, t, pr, pc)) break;
    d.swap_rows(t, pr);
    s.u.swap_rows(t, pr);
    d.swap_cols(t, pc);
    s.v.swap_cols(t, pc);

    for (;;) {
      // Clear the pivot column, then the pivot row; a non-zero remainder
      // is strictly smaller than the pivot and becomes the new pivot.
      bool dirty = false;
      for (int r = t + 1; r < d.rows(); ++r) {
        if (d.at(r, t) == 0) continue;
        BigInt q = d.at(r, t) / d.at(t, t);
        if (q != 0) {
          d.add_row(r, t, -q);
          s.u.add_row(r, t, -q);
        }
        if (d.at(r, t) != 0) {
          d.swap_rows(t, r);
          s.u.swap_rows(t, r);
          dirty = true;
          break;
        }
      }
      if (dirty) continue;
      for (int c = t + 1; c < d.cols(); ++c) {
        if (d.at(t, c) == 0) continue;
        BigInt q = d.at(t, c) / d.at(t, t);
        if (q != 0) {
          d.add_col(c, t, -q);
          s.v.add_col(c, t, -q);
        }
        if (d.at(t, c) != 0) {
          d.swap_cols(t, c);
          s.v.swap_cols(t, c);
          dirty = true;
          break;
        }
      }
      if (dirty) continue;

      // Row and column are clear; enforce d_t | trailing entries.
      bool fixed = true;
      for (int r = t + 1; r < d.rows() && fixed; ++r)
        for (int c = t + 1; c < d.cols() && fixed; ++c)
          if (d.at(r, c) % d.at(t, t) != 0) {
            d.add_row(t, r, 1);
            s.u.add_row(t, r, 1);
            fixed = false;
          }
      if (fixed) break;
    }

    if (d.at(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
  }
  return s;
}

IntegerMatrix relator_matrix(const Presentation& p) {
  IntegerMatrix m(p.num_generators(), static_cast<int>(p.relators().size()));
  for (int c = 0; c < static_cast<int>(p.relators().size()); ++c)
    for (const auto& l : p.relators()[static_cast<std::size_t>(c)].letters())
      m.at(l.gen, c) += l.exp;
  return m;
}

AbelianDecomposition abelianization(const Presentation& p) {
  SmithDecomposition s = smith_normal_form(relator_matrix(p));
  AbelianDecomposition out;
  int nonzero = 0;
  for (const BigInt& di : s.diagonal()) {
    if (di == 0) continue;
    ++nonzero;
    if (di >= 2) out.torsion.push_back(di);
  }
  out.free_rank = p.num_generators() - nonzero;
  return out;
}

std::vector<BigInt> exponent_vector(const Presentation& p, const Word& w) {
  p.check_word(w);
  std::vector<BigInt> v(static_cast<std::size_t>(p.num_generators()), BigInt(0));
  for (const auto& l : w.letters()) v[static_cast<std::size_t>(l.gen)] += l.exp;
  return v;
}

Order2Filter::Order2Filter(const Presentation& p) : num_generators_(p.num_generators()) {
  SmithDecomposition s = smith_normal_form(relator_matrix(p));
  u_ = std::move(s.u);
  diag_ = s.diagonal();
  for (const BigInt& di : diag_)
    if (di != 0) ++rank_;
}

bool Order2Filter::passes(const Word& g) const {
  if (g.max_generator() >= num_generators_)
    throw InputError("word references a generator outside the presentation");
  // 2[g] lies in the relator image iff, after the row transform U, each
  // coordinate is divisible by the matching diagonal entry (zero, past
  // the rank).
  std::vector<BigInt> v(static_cast<std::size_t>(num_generators_), BigInt(0));
  for (const auto& l : g.letters()) v[static_cast<std::size_t>(l.gen)] += 2 * l.exp;
  for (int r = 0; r < num_generators_; ++r) {
    BigInt y = 0;
    for (int c = 0; c < num_generators_; ++c) {
      if (u_.at(r, c) == 0 || v[static_cast<std::size_t>(c)] == 0) continue;
      y += u_.at(r, c) * v[static_cast<std::size_t>(c)];
    }
    if (r < rank_) {
      if (y % diag_[static_cast<std::size_t>(r)] != 0) return false;
    } else if (y != 0) {
      return false;
    }
  }
  return true;
}

bool order2_necessary(const Presentation& p, const Word& g) {
  return Order2Filter(p).passes(g);
}

}  // namespace gt2
