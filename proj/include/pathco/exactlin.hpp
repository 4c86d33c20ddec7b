// Exact linear algebra over the rationals or a prime field.
//
// Matrices are plain Eigen dense matrices over an exact scalar type. Two
// scalars are provided: Rational (GMP-backed) and Zp (integers modulo a
// prime chosen at run time through ModulusGuard). Every algorithm here is
// Gauss-Jordan elimination; no floating point is involved anywhere.
#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>

#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathco {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Element of the prime field F_p. The modulus is thread-local, so each
/// thread can work in its own field; install it with a ModulusGuard.
class Zp {
 public:
  Zp() = default;
  template <std::integral I>
  Zp(I v) : v_(reduce(static_cast<long long>(v))) {}  // NOLINT(google-explicit-constructor)

  static std::uint64_t modulus() { return modulus_ref(); }
  std::uint64_t value() const { return v_; }

  friend Zp operator+(Zp a, Zp b) { return raw(add(a.v_, b.v_)); }
  friend Zp operator-(Zp a, Zp b) { return raw(add(a.v_, modulus() - b.v_)); }
  friend Zp operator*(Zp a, Zp b) { return raw(mul(a.v_, b.v_)); }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  Zp operator-() const { return raw(v_ == 0 ? 0 : modulus() - v_); }
  Zp& operator+=(Zp b) { return *this = *this + b; }
  Zp& operator-=(Zp b) { return *this = *this - b; }
  Zp& operator*=(Zp b) { return *this = *this * b; }
  Zp& operator/=(Zp b) { return *this = *this / b; }
  friend bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }
  friend bool operator!=(Zp a, Zp b) { return a.v_ != b.v_; }

  Zp inverse() const;

  friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.v_; }

 private:
  friend class ModulusGuard;
  static std::uint64_t& modulus_ref() {
    thread_local std::uint64_t p = 0;
    return p;
  }
  static Zp raw(std::uint64_t v) {
    Zp z;
    z.v_ = v;
    return z;
  }
  static std::uint64_t reduce(long long v) {
    if (v == 0) return 0;
    const auto p = static_cast<long long>(modulus());
    if (p == 0) throw std::logic_error("Zp used without an active ModulusGuard");
    long long r = v % p;
    return static_cast<std::uint64_t>(r < 0 ? r + p : r);
  }
  static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s >= modulus() ? s - modulus() : s;
  }
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % modulus());
  }

  std::uint64_t v_ = 0;
};

/// Installs a prime modulus for Zp on the current thread for its lifetime.
class ModulusGuard {
 public:
  explicit ModulusGuard(std::uint64_t p);
  ~ModulusGuard() { Zp::modulus_ref() = saved_; }
  ModulusGuard(const ModulusGuard&) = delete;
  ModulusGuard& operator=(const ModulusGuard&) = delete;

 private:
  std::uint64_t saved_;
};

bool is_prime(std::uint64_t n);

/// The ground field: the rationals (characteristic 0) or F_p.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  std::uint64_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q", "F<p>" and "Fp" spellings such as "F101" or "F<101>".
  static FieldSpec parse(const std::string& text);
  std::string name() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

}  // namespace pathco

namespace Eigen {
template <>
struct NumTraits<pathco::Zp> : GenericNumTraits<pathco::Zp> {
  typedef pathco::Zp Real;
  typedef pathco::Zp NonInteger;
  typedef pathco::Zp Literal;
  typedef pathco::Zp Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<pathco::Rational> : GenericNumTraits<pathco::Rational> {
  typedef pathco::Rational Real;
  typedef pathco::Rational NonInteger;
  typedef pathco::Rational Literal;
  typedef pathco::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace pathco {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

template <class S>
bool is_zero(const Matrix<S>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != S(0)) return false;
  return true;
}

/// Reduced row echelon form together with its pivot columns.
template <class S>
struct Echelon {
  Matrix<S> rref;             // first pivots.size() rows are the nonzero rows
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

template <class S>
Echelon<S> row_echelon(Matrix<S> m) {
  Echelon<S> out;
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i)
      if (m(i, c) != S(0)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    const S inv = S(1) / m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == S(0)) continue;
      const S f = m(i, c);
      for (Index j = c; j < cols; ++j)
        if (m(r, j) != S(0)) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rref = std::move(m);
  return out;
}

template <class S>
Index rank(const Matrix<S>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // eliminate along the shorter side
  if (m.rows() > m.cols()) return static_cast<Index>(row_echelon<S>(m.transpose()).pivots.size());
  return static_cast<Index>(row_echelon<S>(m).pivots.size());
}

/// Columns of the result form a basis of ker(m); there are cols - rank of them.
template <class S>
Matrix<S> kernel_basis(const Matrix<S>& m) {
  const Index cols = m.cols();
  if (m.rows() == 0) return Matrix<S>::Identity(cols, cols);
  Echelon<S> e = row_echelon<S>(m);
  std::vector<char> is_pivot(cols, 0);
  for (Index p : e.pivots) is_pivot[p] = 1;
  Matrix<S> k = Matrix<S>::Zero(cols, cols - static_cast<Index>(e.pivots.size()));
  Index out = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    k(f, out) = S(1);
    for (Index r = 0; r < static_cast<Index>(e.pivots.size()); ++r) k(e.pivots[r], out) = -e.rref(r, f);
    ++out;
  }
  return k;
}

/// Quotient of the target space by the column space of m.
/// projection * m == 0, projection * section == I.
template <class S>
struct Cokernel {
  Index dimension = 0;
  Matrix<S> projection;  // dimension x rows
  Matrix<S> section;     // rows x dimension
};

template <class S>
Cokernel<S> cokernel_data(const Matrix<S>& m) {
  const Index rows = m.rows();
  Cokernel<S> out;
  std::vector<Index> pivots;
  Matrix<S> basis;  // rows of the reduced image basis
  if (m.cols() > 0 && rows > 0) {
    Echelon<S> e = row_echelon<S>(m.transpose());
    pivots = e.pivots;
    basis = e.rref.topRows(static_cast<Index>(pivots.size()));
  }
  std::vector<char> is_pivot(rows, 0);
  for (Index p : pivots) is_pivot[p] = 1;
  out.dimension = rows - static_cast<Index>(pivots.size());
  out.projection = Matrix<S>::Zero(out.dimension, rows);
  out.section = Matrix<S>::Zero(rows, out.dimension);
  Index k = 0;
  for (Index np = 0; np < rows; ++np) {
    if (is_pivot[np]) continue;
    out.projection(k, np) = S(1);
    for (Index r = 0; r < static_cast<Index>(pivots.size()); ++r)
      if (basis(r, np) != S(0)) out.projection(k, pivots[r]) = -basis(r, np);
    out.section(np, k) = S(1);
    ++k;
  }
  return out;
}

/// Columns form a basis of the column space of m.
template <class S>
Matrix<S> image_basis(const Matrix<S>& m) {
  if (m.cols() == 0 || m.rows() == 0) return Matrix<S>::Zero(m.rows(), 0);
  Echelon<S> e = row_echelon<S>(m.transpose());
  return e.rref.topRows(static_cast<Index>(e.pivots.size())).transpose();
}

/// Some x with m x = b, if one exists.
template <class S>
std::optional<Vector<S>> solve(const Matrix<S>& m, const Vector<S>& b) {
  Matrix<S> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  Echelon<S> e = row_echelon<S>(aug);
  Vector<S> x = Vector<S>::Zero(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x(e.pivots[r]) = e.rref(static_cast<Index>(r), m.cols());
  }
  return x;
}

template <class S>
bool is_invertible(const Matrix<S>& m) {
  return m.rows() == m.cols() && rank<S>(m) == m.rows();
}

template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  const Index n = m.rows();
  Matrix<S> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Matrix<S>::Identity(n, n);
  Echelon<S> e = row_echelon<S>(aug);
  if (static_cast<Index>(e.pivots.size()) < n || (n > 0 && e.pivots[n - 1] >= n))
    throw std::domain_error("inverse of a singular matrix");
  return e.rref.rightCols(n);
}

/// Parses "3", "-2", "4/7". For Zp, fractions are interpreted in F_p.
template <class S>
S parse_scalar(const std::string& text);

template <class S>
std::string scalar_to_string(const S& s);

extern template Echelon<Rational> row_echelon<Rational>(Matrix<Rational>);
extern template Echelon<Zp> row_echelon<Zp>(Matrix<Zp>);
extern template Matrix<Rational> kernel_basis<Rational>(const Matrix<Rational>&);
extern template Matrix<Zp> kernel_basis<Zp>(const Matrix<Zp>&);
extern template Cokernel<Rational> cokernel_data<Rational>(const Matrix<Rational>&);
extern template Cokernel<Zp> cokernel_data<Zp>(const Matrix<Zp>&);

}  // namespace pathco
