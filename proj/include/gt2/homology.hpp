#ifndef GT2_HOMOLOGY_HPP
#define GT2_HOMOLOGY_HPP

#include <vector>

#include "gt2/bigint.hpp"
#include "gt2/presentation.hpp"

namespace gt2 {

// Dense integer matrix with unbounded entries.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols);
  static IntegerMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  const BigInt& at(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
  }

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  void negate_row(int r);
  // row a += q * row b, col a += q * col b
  void add_row(int a, int b, const BigInt& q);
  void add_col(int a, int b, const BigInt& q);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> entries_;
};

struct SmithDecomposition {
  IntegerMatrix u;  // rows x rows, unimodular
  IntegerMatrix d;  // diagonal, d_i >= 0, d_i | d_{i+1}
  IntegerMatrix v;  // cols x cols, unimodular

  std::vector<BigInt> diagonal() const;
};

// U * m * V = D with deterministic pivoting: smallest non-zero absolute
// value, ties broken row-major.
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

struct AbelianDecomposition {
  int free_rank = 0;
  std::vector<BigInt> torsion;  // d_i >= 2 with d_i | d_{i+1}

  friend bool operator==(const AbelianDecomposition&, const AbelianDecomposition&) = default;
};

// Exponent-sum matrix of a presentation: rows indexed by generators,
// columns by relators.
IntegerMatrix relator_matrix(const Presentation& p);

AbelianDecomposition abelianization(const Presentation& p);

// Necessary condition for g to be a generalized torsion element of order
// two: 2[g] = 0 in H1. False rules g out; true is inconclusive.
bool order2_necessary(const Presentation& p, const Word& g);

// Precomputed form of the same test for scanning many words.
class Order2Filter {
public:
  explicit Order2Filter(const Presentation& p);
  bool passes(const Word& g) const;

private:
  int num_generators_;
  int rank_ = 0;
  IntegerMatrix u_;
  std::vector<BigInt> diag_;
};

std::vector<BigInt> exponent_vector(const Presentation& p, const Word& w);

}  // namespace gt2

#endif
