#pragma once

#include <vector>

#include "atc/geometry.hpp"

namespace atc {

/// Dense matrix of local fractions on one chart set. Zero-row or zero-column
/// shapes are legal; a product across an empty inner dimension is the zero
/// matrix of the outer shape.
class FractionMatrix {
 public:
  FractionMatrix(std::size_t rows, std::size_t cols, ChartSet cs, RingPtr ring);
  static FractionMatrix identity(std::size_t n, const ChartSet& cs, const RingPtr& ring);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const ChartSet& cs() const { return cs_; }
  const RingPtr& ring() const { return ring_; }

  LocalFraction& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const LocalFraction& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  FractionMatrix transpose() const;
  FractionMatrix scaled(const Rational& c) const;
  LocalFraction trace() const;  // pre: square
  LocalFraction det() const;    // pre: square; Laplace over column masks

  friend FractionMatrix operator-(const FractionMatrix& a);
  friend FractionMatrix operator+(const FractionMatrix& a, const FractionMatrix& b);
  friend FractionMatrix operator-(const FractionMatrix& a, const FractionMatrix& b);
  friend FractionMatrix operator*(const FractionMatrix& a, const FractionMatrix& b);

  /// Row-major Kronecker product: block (u,v) is a_{uv} * B.
  static FractionMatrix kronecker(const FractionMatrix& a, const FractionMatrix& b);

 private:
  std::size_t rows_, cols_;
  ChartSet cs_;
  RingPtr ring_;
  std::vector<LocalFraction> entries_;
};

FractionMatrix restrict_matrix(const ChartedScheme& X, const FractionMatrix& m,
                               const ChartSet& target);

/// Matrix of ambient one-forms, stored as one fraction-matrix slice per dx_v.
class FormMatrix {
 public:
  FormMatrix(std::size_t rows, std::size_t cols, ChartSet cs, RingPtr ring);

  std::size_t rows() const { return slices_.front().rows(); }
  std::size_t cols() const { return slices_.front().cols(); }
  std::size_t nvars() const { return slices_.size(); }
  const ChartSet& cs() const { return slices_.front().cs(); }
  const RingPtr& ring() const { return slices_.front().ring(); }

  FractionMatrix& slice(std::size_t v) { return slices_[v]; }
  const FractionMatrix& slice(std::size_t v) const { return slices_[v]; }

  /// Entrywise universal derivation of a fraction matrix.
  static FormMatrix d_of(const FractionMatrix& m);

  FormMatrix scaled(const Rational& c) const;
  FormMatrix trace() const;  // 1x1 result

  friend FormMatrix operator-(const FormMatrix& a);
  friend FormMatrix operator+(const FormMatrix& a, const FormMatrix& b);
  friend FormMatrix operator-(const FormMatrix& a, const FormMatrix& b);
  friend FormMatrix operator*(const FractionMatrix& a, const FormMatrix& b);
  friend FormMatrix operator*(const FormMatrix& a, const FractionMatrix& b);

 private:
  explicit FormMatrix(std::vector<FractionMatrix> slices) : slices_(std::move(slices)) {}
  std::vector<FractionMatrix> slices_;
};

FormMatrix restrict_matrix(const ChartedScheme& X, const FormMatrix& m, const ChartSet& target);

/// Entrywise comparisons used by the verifiers; empty shapes are equal.
bool matrix_equal_mod_ideal(const ChartedScheme& X, const FractionMatrix& a,
                            const FractionMatrix& b);
bool matrix_equal_mod_ideal_sq(const ChartedScheme& X, const FractionMatrix& a,
                               const FractionMatrix& b);
bool matrix_equal_mod_ideal(const ChartedScheme& X, const FormMatrix& a, const FormMatrix& b);
bool matrix_equal_mod_jacobian(const ChartedScheme& X, const FormMatrix& a, const FormMatrix& b);
bool matrix_equal_ring(const FractionMatrix& a, const FractionMatrix& b);

}  // namespace atc
