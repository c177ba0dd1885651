#include "atc/fraction_matrix.hpp"

#include <map>
#include <stdexcept>

namespace atc {

namespace {

void require_shape(const FractionMatrix& a, const FractionMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch");
  if (!same_chart_set(a.cs(), b.cs())) throw ChartMismatch();
}

}  // namespace

FractionMatrix::FractionMatrix(std::size_t rows, std::size_t cols, ChartSet cs, RingPtr ring)
    : rows_(rows),
      cols_(cols),
      cs_(std::move(cs)),
      ring_(std::move(ring)),
      entries_(rows * cols, frac_zero(cs_, ring_)) {}

FractionMatrix FractionMatrix::identity(std::size_t n, const ChartSet& cs, const RingPtr& ring) {
  FractionMatrix m(n, n, cs, ring);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = frac_of(cs, Polynomial::constant(ring, Rational(1)));
  return m;
}

FractionMatrix FractionMatrix::transpose() const {
  FractionMatrix t(cols_, rows_, cs_, ring_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

FractionMatrix FractionMatrix::scaled(const Rational& c) const {
  FractionMatrix m = *this;
  for (auto& e : m.entries_) e = scale(e, c);
  return m;
}

LocalFraction FractionMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
  LocalFraction t = frac_zero(cs_, ring_);
  for (std::size_t i = 0; i < rows_; ++i) t = t + at(i, i);
  return t;
}

LocalFraction FractionMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return frac_of(cs_, Polynomial::constant(ring_, Rational(1)));
  if (n > 12) throw std::invalid_argument("determinant size out of range");
  // Laplace along successive rows; memoized on the active column mask.
  std::map<std::uint32_t, LocalFraction> memo;
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
  auto rec = [&](auto&& self, std::uint32_t mask) -> LocalFraction {
    if (mask == 0) return frac_of(cs_, Polynomial::constant(ring_, Rational(1)));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(mask));
    LocalFraction acc = frac_zero(cs_, ring_);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      const LocalFraction& e = at(row, c);
      if (!e.syntactically_zero()) {
        LocalFraction sub = self(self, mask & ~(1u << c));
        LocalFraction term = e * sub;
        acc = (sign > 0) ? acc + term : acc - term;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, full);
}

FractionMatrix operator-(const FractionMatrix& a) { return a.scaled(Rational(-1)); }

FractionMatrix operator+(const FractionMatrix& a, const FractionMatrix& b) {
  require_shape(a, b);
  FractionMatrix m = a;
  for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] = m.entries_[i] + b.entries_[i];
  return m;
}

FractionMatrix operator-(const FractionMatrix& a, const FractionMatrix& b) { return a + (-b); }

FractionMatrix operator*(const FractionMatrix& a, const FractionMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  if (!same_chart_set(a.cs(), b.cs())) throw ChartMismatch();
  FractionMatrix m(a.rows(), b.cols(), a.cs(), a.ring());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      LocalFraction acc = frac_zero(a.cs(), a.ring());
      for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a.at(r, k) * b.at(k, c);
      m.at(r, c) = std::move(acc);
    }
  return m;
}

FractionMatrix FractionMatrix::kronecker(const FractionMatrix& a, const FractionMatrix& b) {
  if (!same_chart_set(a.cs(), b.cs())) throw ChartMismatch();
  FractionMatrix m(a.rows() * b.rows(), a.cols() * b.cols(), a.cs(), a.ring());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac)
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          m.at(ar * b.rows() + br, ac * b.cols() + bc) = a.at(ar, ac) * b.at(br, bc);
  return m;
}

FractionMatrix restrict_matrix(const ChartedScheme& X, const FractionMatrix& m,
                               const ChartSet& target) {
  FractionMatrix out(m.rows(), m.cols(), target, m.ring());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out.at(r, c) = restrict_fraction(X, m.at(r, c), target);
  return out;
}

FormMatrix::FormMatrix(std::size_t rows, std::size_t cols, ChartSet cs, RingPtr ring)
    : slices_(ring->nvars(), FractionMatrix(rows, cols, cs, ring)) {}

FormMatrix FormMatrix::d_of(const FractionMatrix& m) {
  FormMatrix out(m.rows(), m.cols(), m.cs(), m.ring());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const AmbientForm form = derive_fraction(m.at(r, c));
      for (std::size_t v = 0; v < out.nvars(); ++v) out.slices_[v].at(r, c) = form.coeffs[v];
    }
  return out;
}

FormMatrix FormMatrix::scaled(const Rational& c) const {
  std::vector<FractionMatrix> slices;
  slices.reserve(slices_.size());
  for (const auto& s : slices_) slices.push_back(s.scaled(c));
  return FormMatrix(std::move(slices));
}

FormMatrix FormMatrix::trace() const {
  FormMatrix out(1, 1, cs(), ring());
  for (std::size_t v = 0; v < nvars(); ++v) out.slices_[v].at(0, 0) = slices_[v].trace();
  return out;
}

FormMatrix operator-(const FormMatrix& a) { return a.scaled(Rational(-1)); }

FormMatrix operator+(const FormMatrix& a, const FormMatrix& b) {
  std::vector<FractionMatrix> slices;
  slices.reserve(a.slices_.size());
  for (std::size_t v = 0; v < a.slices_.size(); ++v) slices.push_back(a.slices_[v] + b.slices_[v]);
  return FormMatrix(std::move(slices));
}

FormMatrix operator-(const FormMatrix& a, const FormMatrix& b) { return a + (-b); }

FormMatrix operator*(const FractionMatrix& a, const FormMatrix& b) {
  std::vector<FractionMatrix> slices;
  slices.reserve(b.slices_.size());
  for (const auto& s : b.slices_) slices.push_back(a * s);
  return FormMatrix(std::move(slices));
}

FormMatrix operator*(const FormMatrix& a, const FractionMatrix& b) {
  std::vector<FractionMatrix> slices;
  slices.reserve(a.slices_.size());
  for (const auto& s : a.slices_) slices.push_back(s * b);
  return FormMatrix(std::move(slices));
}

FormMatrix restrict_matrix(const ChartedScheme& X, const FormMatrix& m, const ChartSet& target) {
  FormMatrix out(m.rows(), m.cols(), target, m.ring());
  for (std::size_t v = 0; v < m.nvars(); ++v) out.slice(v) = restrict_matrix(X, m.slice(v), target);
  return out;
}

bool matrix_equal_mod_ideal(const ChartedScheme& X, const FractionMatrix& a,
                            const FractionMatrix& b) {
  require_shape(a, b);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!equal_mod_ideal(X, a.at(r, c), b.at(r, c))) return false;
  return true;
}

bool matrix_equal_mod_ideal_sq(const ChartedScheme& X, const FractionMatrix& a,
                               const FractionMatrix& b) {
  require_shape(a, b);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!equal_mod_ideal_sq(X, a.at(r, c), b.at(r, c))) return false;
  return true;
}

bool matrix_equal_mod_ideal(const ChartedScheme& X, const FormMatrix& a, const FormMatrix& b) {
  for (std::size_t v = 0; v < a.nvars(); ++v)
    if (!matrix_equal_mod_ideal(X, a.slice(v), b.slice(v))) return false;
  return true;
}

bool matrix_equal_mod_jacobian(const ChartedScheme& X, const FormMatrix& a, const FormMatrix& b) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      AmbientForm fa{std::vector<LocalFraction>()};
      AmbientForm fb{std::vector<LocalFraction>()};
      for (std::size_t v = 0; v < a.nvars(); ++v) {
        fa.coeffs.push_back(a.slice(v).at(r, c));
        fb.coeffs.push_back(b.slice(v).at(r, c));
      }
      if (!equal_mod_jacobian(X, fa, fb)) return false;
    }
  return true;
}

bool matrix_equal_ring(const FractionMatrix& a, const FractionMatrix& b) {
  require_shape(a, b);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!equal_ring(a.at(r, c), b.at(r, c))) return false;
  return true;
}

}  // namespace atc
