#include "pathco/exactlin.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

using namespace pathco;
using Q = Rational;

namespace {

Matrix<Q> mat(std::initializer_list<std::initializer_list<int>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
  Matrix<Q> m(r, c);
  Index i = 0;
  for (auto row : rows) {
    Index j = 0;
    for (int v : row) m(i, j++) = Q(v);
    ++i;
  }
  return m;
}

// Laplace expansion; only used on tiny matrices.
Q det_oracle(const Matrix<Q>& m) {
  const Index n = m.rows();
  if (n == 0) return Q(1);
  Q total = 0;
  for (Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    Matrix<Q> minor(n - 1, n - 1);
    for (Index r = 1; r < n; ++r)
      for (Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    total += ((j % 2) ? Q(-1) : Q(1)) * m(0, j) * det_oracle(minor);
  }
  return total;
}

// Largest k with a nonzero k x k minor.
Index rank_oracle(const Matrix<Q>& m) {
  const Index top = std::min(m.rows(), m.cols());
  for (Index k = top; k > 0; --k) {
    std::vector<int> rs(static_cast<std::size_t>(m.rows()), 0), cs(static_cast<std::size_t>(m.cols()), 0);
    std::fill(rs.begin(), rs.begin() + k, 1);
    do {
      std::fill(cs.begin(), cs.end(), 0);
      std::fill(cs.begin(), cs.begin() + k, 1);
      do {
        Matrix<Q> sub(k, k);
        for (Index i = 0, si = 0; i < m.rows(); ++i) {
          if (!rs[static_cast<std::size_t>(i)]) continue;
          for (Index j = 0, sj = 0; j < m.cols(); ++j)
            if (cs[static_cast<std::size_t>(j)]) sub(si, sj++) = m(i, j);
          ++si;
        }
        if (det_oracle(sub) != 0) return k;
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
  }
  return 0;
}

Matrix<Q> random_matrix(std::mt19937& rng, Index r, Index c, int sparsity) {
  std::uniform_int_distribution<int> val(-3, 3), keep(0, sparsity);
  Matrix<Q> m = Matrix<Q>::Zero(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j)
      if (keep(rng) == 0) m(i, j) = Q(val(rng));
  return m;
}

// Low-rank product so that degenerate cases are common.
Matrix<Q> random_low_rank(std::mt19937& rng, Index r, Index c) {
  std::uniform_int_distribution<Index> inner(0, std::min(r, c));
  const Index k = inner(rng);
  return random_matrix(rng, r, k, 1) * random_matrix(rng, k, c, 1);
}

}  // namespace

TEST_CASE("rank on small fixed matrices", "[exactlin]") {
  CHECK(rank<Q>(Matrix<Q>(0, 0)) == 0);
  CHECK(rank<Q>(Matrix<Q>::Identity(2, 2)) == 2);
  CHECK(rank<Q>(mat({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel basis on small fixed matrices", "[exactlin]") {
  CHECK(kernel_basis<Q>(Matrix<Q>::Identity(3, 3)).cols() == 0);
  CHECK(kernel_basis<Q>(Matrix<Q>::Zero(2, 3)).cols() == 3);
  const Matrix<Q> k = kernel_basis<Q>(mat({{1, 2}, {2, 4}}));
  REQUIRE(k.cols() == 1);
  // proportional to (2, -1)
  CHECK(k(0, 0) * Q(-1) == k(1, 0) * Q(2));
  CHECK(k(0, 0) != 0);
}

TEST_CASE("cokernel data on small fixed matrices", "[exactlin]") {
  CHECK(cokernel_data<Q>(Matrix<Q>::Identity(3, 3)).dimension == 0);
  const auto z = cokernel_data<Q>(Matrix<Q>::Zero(3, 2));
  CHECK(z.dimension == 3);
  CHECK(z.projection == Matrix<Q>::Identity(3, 3));
  const auto c = cokernel_data<Q>(mat({{1}, {2}}));
  CHECK(c.dimension == 1);
  CHECK(is_zero<Q>(c.projection * mat({{1}, {2}})));
}

TEST_CASE("rank agrees with the minor oracle", "[exactlin][property]") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<Index> dim(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const Matrix<Q> m = trial % 2 ? random_matrix(rng, dim(rng), dim(rng), 2) : random_low_rank(rng, dim(rng), dim(rng));
    INFO("trial " << trial);
    CHECK(rank<Q>(m) == rank_oracle(m));
  }
}

TEST_CASE("rank-nullity, exactness and permutation invariance", "[exactlin][property]") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Index> dim(0, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const Index r = dim(rng), c = dim(rng);
    const Matrix<Q> m = random_low_rank(rng, r, c);
    const Index rk = rank<Q>(m);
    const Matrix<Q> k = kernel_basis<Q>(m);
    const auto co = cokernel_data<Q>(m);
    INFO("trial " << trial);
    CHECK(rk + k.cols() == c);
    CHECK(rk + co.dimension == r);
    CHECK(is_zero<Q>(m * k));
    CHECK(rank<Q>(k) == k.cols());
    CHECK(is_zero<Q>(co.projection * m));
    CHECK(rank<Q>(co.projection) == co.dimension);
    CHECK(co.projection * co.section == Matrix<Q>::Identity(co.dimension, co.dimension));

    std::vector<Index> rp(static_cast<std::size_t>(r)), cp(static_cast<std::size_t>(c));
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    Matrix<Q> shuffled(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) shuffled(i, j) = m(rp[static_cast<std::size_t>(i)], cp[static_cast<std::size_t>(j)]);
    CHECK(rank<Q>(shuffled) == rk);
    CHECK(kernel_basis<Q>(shuffled).cols() == k.cols());
  }
}

TEST_CASE("solve and inverse", "[exactlin]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix<Q> m = random_matrix(rng, 4, 4, 1) + Matrix<Q>::Identity(4, 4) * Q(7);
    if (!is_invertible<Q>(m)) continue;
    CHECK(m * inverse<Q>(m) == Matrix<Q>::Identity(4, 4));
    Vector<Q> b = random_matrix(rng, 4, 1, 0);
    auto x = solve<Q>(m, b);
    REQUIRE(x);
    CHECK(m * *x == b);
  }
  CHECK_FALSE(solve<Q>(mat({{1, 2}, {2, 4}}), Vector<Q>(mat({{1}, {0}}))).has_value());
}

TEST_CASE("prime field arithmetic", "[exactlin]") {
  ModulusGuard guard(101);
  Zp a(5), b(-3);
  CHECK((a + b).value() == 2);
  CHECK((a * a.inverse()) == Zp(1));
  CHECK((Zp(1) / Zp(2) * Zp(2)) == Zp(1));
  CHECK(parse_scalar<Zp>("1/2") * Zp(2) == Zp(1));
  Matrix<Zp> m(2, 2);
  m << Zp(1), Zp(2), Zp(2), Zp(4);
  CHECK(rank<Zp>(m) == 1);
  CHECK(kernel_basis<Zp>(m).cols() == 1);
  {
    ModulusGuard inner(3);
    CHECK(Zp(4).value() == 1);
  }
  CHECK(Zp::modulus() == 101);
  CHECK_THROWS(ModulusGuard(100));
}

TEST_CASE("prime field rank matches rational rank on small entries", "[exactlin][property]") {
  ModulusGuard guard(1000003);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix<Q> m = random_low_rank(rng, 5, 5);
    Matrix<Zp> mp(5, 5);
    for (Index i = 0; i < 5; ++i)
      for (Index j = 0; j < 5; ++j) mp(i, j) = Zp(static_cast<long long>(m(i, j).convert_to<long>()));
    CHECK(rank<Zp>(mp) == rank<Q>(m));
  }
}

TEST_CASE("field spec parsing", "[exactlin]") {
  CHECK(FieldSpec::parse("Q").kind == FieldSpec::Kind::Rationals);
  CHECK(FieldSpec::parse("F<101>").characteristic == 101);
  CHECK(FieldSpec::parse("F7").characteristic == 7);
  CHECK_THROWS(FieldSpec::parse("F8"));
  CHECK_THROWS(FieldSpec::parse("R"));
  CHECK(parse_scalar<Q>("-4/6") == Q(-2) / Q(3));
}
