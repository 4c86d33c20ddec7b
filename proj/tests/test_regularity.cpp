#include "pathco/regularity.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace pathco;
using namespace fixtures;
using Q = Rational;
using R = Rep<Q>;

namespace {

R jordan(const Quiver& loop, int a) {
  Matrix<Q> m = Matrix<Q>::Zero(a, a);
  for (int k = 0; k + 1 < a; ++k) m(k + 1, k) = Q(1);
  return rep_from_matrices<Q>(loop, {a}, {m}, Side::Left);
}

VertexTwist<Q> scaled_identity(const Quiver& q, std::vector<Q> scalars) {
  VertexTwist<Q> t = VertexTwist<Q>::identity(q);
  t.scalars = std::move(scalars);
  return t;
}

}  // namespace

TEST_CASE("global dimension", "[regularity]") {
  CHECK(global_dimension(no_arrow()) == 0);
  CHECK(global_dimension(no_arrow(3)) == 0);
  CHECK(global_dimension(loop_quiver()) == 1);
  CHECK(global_dimension(two_cycle()) == 1);
  CHECK(global_dimension(kronecker()) == 1);
  CHECK_THROWS_AS(global_dimension(two_loops()), std::invalid_argument);
}

TEST_CASE("natural map on simples", "[regularity]") {
  CHECK(natural_map<Q>(two_cycle(), 0, Side::Left, 8) == 1);
  CHECK(natural_map<Q>(two_cycle(), 1, Side::Left, 8) == 0);
  CHECK(natural_map<Q>(loop_quiver(), 0, Side::Left, 8) == 0);
  // arrows i -> i+1: the left natural map follows the arrows, the right one runs against them
  const Quiver tri = three_cycle();
  for (Vertex i = 0; i < 3; ++i) {
    CHECK(natural_map<Q>(tri, i, Side::Left, 10) == (i + 1) % 3);
    CHECK(natural_map<Q>(tri, i, Side::Right, 10) == (i + 2) % 3);
  }
  CHECK(natural_map<Q>(no_arrow(2), 1, Side::Left, 4) == 1);
  CHECK_THROWS_AS(natural_map<Q>(kronecker(), 0, Side::Left, 6), NotRegular);
}

TEST_CASE("AS-regularity verdicts", "[regularity]") {
  for (const Quiver& q : {loop_quiver(), two_cycle(), three_cycle(), no_arrow(), no_arrow(3)}) {
    const RegularityVerdict v = as_regular_check<Q>(q, 10);
    CHECK(v.as_regular);
    CHECK(v.sides_agree);
    CHECK(v.natural_bijective);
    CHECK(v.left.witnesses.empty());
    CHECK(v.left.table.size() == static_cast<std::size_t>(q.vertex_count() * (v.gldim + 1)));
  }
  const RegularityVerdict two = as_regular_check<Q>(two_cycle(), 8);
  CHECK(two.left.natural == std::vector<Vertex>{1, 0});
  CHECK(two.right.natural == std::vector<Vertex>{1, 0});

  const RegularityVerdict kr = as_regular_check<Q>(kronecker(), 6);
  CHECK_FALSE(kr.as_regular);
  CHECK(kr.sides_agree);
  CHECK(kr.left.natural.empty());
  bool sink_hom = false, source_ext = false;
  for (const auto& w : kr.left.witnesses) {
    if (w.simple == 1 && w.degree == 0 && w.dimension == 3) sink_hom = true;
    if (w.simple == 0 && w.degree == 1 && w.dimension == 5) source_ext = true;
  }
  CHECK(sink_hom);
  CHECK(source_ext);
}

TEST_CASE("inner test", "[regularity]") {
  const Quiver loop = loop_quiver();
  const auto id = inner_test(loop, VertexTwist<Q>::identity(loop));
  CHECK(id.verdict == Innerness::Inner);
  CHECK(id.coboundary == std::vector<Q>{Q(1)});

  const auto two = inner_test(loop, scaled_identity(loop, {Q(2)}));
  CHECK(two.verdict == Innerness::NotInner);
  REQUIRE(two.obstruction_arrow);
  CHECK(*two.obstruction_arrow == 0);
  CHECK(two.cycle_product == Q(2));
  CHECK(two.obstruction_cycle == std::vector<ArrowId>{0});

  const Quiver cyc = two_cycle();
  VertexTwist<Q> swap{{1, 0}, {1, 0}, {Q(1), Q(1)}};
  CHECK(inner_test(cyc, swap).verdict == Innerness::NotInner);

  const auto cob = inner_test(cyc, scaled_identity(cyc, {Q(2), Q(1, 2)}));
  CHECK(cob.verdict == Innerness::Inner);
  REQUIRE(cob.coboundary.size() == 2);
  for (ArrowId a = 0; a < 2; ++a)
    CHECK(cob.coboundary[static_cast<std::size_t>(cyc.arrow(a).target)] /
              cob.coboundary[static_cast<std::size_t>(cyc.arrow(a).source)] ==
          (a == 0 ? Q(2) : Q(1, 2)));
  const auto obst = inner_test(cyc, scaled_identity(cyc, {Q(2), Q(2)}));
  CHECK(obst.verdict == Innerness::NotInner);
  CHECK(obst.cycle_product == Q(4));
  CHECK(obst.obstruction_cycle.size() == 2);

  const Quiver kr = kronecker();
  CHECK(inner_test(kr, scaled_identity(kr, {Q(3), Q(3)})).verdict == Innerness::Inner);
  CHECK(inner_test(kr, scaled_identity(kr, {Q(2), Q(3)})).verdict == Innerness::NotInner);
}

TEST_CASE("random coboundaries are inner", "[regularity][property]") {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> c(1, 7), sign(0, 1);
  for (const Quiver& q : {loop_quiver(), two_cycle(), three_cycle(), kronecker()})
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Q> cv;
      for (Vertex v = 0; v < q.vertex_count(); ++v) cv.push_back(Q(c(rng)) * (sign(rng) ? Q(1) : Q(-1)));
      std::vector<Q> lambda;
      for (ArrowId a = 0; a < q.arrow_count(); ++a)
        lambda.push_back(cv[static_cast<std::size_t>(q.arrow(a).target)] / cv[static_cast<std::size_t>(q.arrow(a).source)]);
      const auto v = inner_test(q, scaled_identity(q, lambda));
      REQUIRE(v.verdict == Innerness::Inner);
      for (ArrowId a = 0; a < q.arrow_count(); ++a)
        CHECK(lambda[static_cast<std::size_t>(a)] == v.coboundary[static_cast<std::size_t>(q.arrow(a).target)] /
                                                         v.coboundary[static_cast<std::size_t>(q.arrow(a).source)]);
      // perturbing one arrow on a cycle breaks it
      lambda[0] *= Q(5);
      if (q.arrow_count() > 1 || q.arrow(0).source == q.arrow(0).target)
        CHECK(inner_test(q, scaled_identity(q, lambda)).verdict == Innerness::NotInner);
    }
}

TEST_CASE("Nakayama reports", "[regularity]") {
  const auto loop = nakayama<Q>(loop_quiver(), 10, 10);
  CHECK(loop.gldim == 1);
  CHECK(loop.vertex_map == std::vector<Vertex>{0});
  REQUIRE(loop.twist);
  CHECK(loop.twist->is_identity_on_vertices());
  CHECK(loop.twist->scalars == std::vector<Q>{Q(1)});
  CHECK(loop.consistent);
  CHECK(loop.inner.verdict == Innerness::Inner);

  const auto two = nakayama<Q>(two_cycle(), 10, 10);
  CHECK(two.vertex_map == std::vector<Vertex>{1, 0});
  REQUIRE(two.twist);
  CHECK(two.twist->vertex_map == std::vector<Vertex>{1, 0});
  CHECK(two.order == 2);
  CHECK(two.consistent);
  CHECK(two.inner.verdict == Innerness::NotInner);

  const auto tri = nakayama<Q>(three_cycle(), 10, 10);
  CHECK(tri.vertex_map == std::vector<Vertex>{1, 2, 0});
  REQUIRE(tri.twist);
  CHECK(tri.twist->vertex_map == std::vector<Vertex>{2, 0, 1});
  CHECK(tri.order == 3);
  CHECK(tri.consistent);
  CHECK(tri.inner.verdict == Innerness::NotInner);

  const auto pt = nakayama<Q>(no_arrow(2), 4, 4);
  CHECK(pt.gldim == 0);
  CHECK(pt.vertex_map == std::vector<Vertex>{0, 1});
  CHECK(pt.inner.verdict == Innerness::Inner);

  CHECK_THROWS_AS(nakayama<Q>(kronecker(), 6, 6), NotRegular);
}

TEST_CASE("local cohomology matches C under the twist", "[regularity][property]") {
  for (const Quiver& q : cycle_quivers()) {
    const auto nak = nakayama<Q>(q, 10, 10);
    REQUIRE(nak.evidence);
    const auto& lc = *nak.evidence;
    CHECK(lc.stabilized);
    const auto paths = bigraded_dims(q, 8);
    for (int l = 0; l <= 8; ++l)
      for (Vertex j = 0; j < q.vertex_count(); ++j)
        for (Vertex v = 0; v < q.vertex_count(); ++v)
          CHECK(lc.dims[static_cast<std::size_t>(l)](j, v) ==
                paths[static_cast<std::size_t>(l)](nak.twist->vertex_map[static_cast<std::size_t>(v)], j));
    const auto h0 = local_cohomology<Q>(q, 0, 10, 10);
    for (const auto& d : h0.dims) CHECK(d.sum() == 0);
  }
}

TEST_CASE("chi probes", "[regularity]") {
  const auto loop = chi_probe<Q>(loop_quiver(), 10);
  CHECK(loop.all_finite);
  for (const auto& e : loop.entries)
    for (long d : e.dims) CHECK(d <= 1);

  const auto two = chi_probe<Q>(two_cycle(), 8);
  CHECK(two.all_finite);
  bool seen = false;
  for (const auto& e : two.entries)
    if (e.probe == "C" && e.simple == 0) {
      CHECK(e.dims == std::vector<long>{0, 1});
      seen = true;
    }
  CHECK(seen);

  const auto pt = chi_probe<Q>(no_arrow(2), 4);
  CHECK(pt.all_finite);
  for (const auto& e : pt.entries) CHECK(e.dims.size() == 1);
}

TEST_CASE("Serre twist", "[regularity]") {
  const Quiver loop = loop_quiver();
  const auto nl = nakayama<Q>(loop, 10, 10);
  const auto img = serre_twist(jordan(loop, 2), nl);
  CHECK(img.shift == 1);
  CHECK(is_isomorphic(img.module, jordan(loop, 2)));

  const Quiver cyc = two_cycle();
  const auto nc = nakayama<Q>(cyc, 10, 10);
  const auto s = serre_twist(simple<Q>(cyc, 0, Side::Left), nc);
  CHECK(s.shift == 1);
  CHECK(is_isomorphic(s.module, simple<Q>(cyc, 1, Side::Left)));

  const Quiver pt = no_arrow(2);
  const auto np = nakayama<Q>(pt, 4, 4);
  const auto x = simple<Q>(pt, 1, Side::Left);
  const auto sp = serre_twist(x, np);
  CHECK(sp.shift == 0);
  CHECK(is_isomorphic(sp.module, x));
}

TEST_CASE("Calabi-Yau checks", "[regularity]") {
  const Quiver loop = loop_quiver();
  std::vector<R> family;
  for (int j = 1; j <= 4; ++j) family.push_back(jordan(loop, j));
  const auto cy = cy_check(loop, family, nakayama<Q>(loop, 10, 10));
  CHECK(cy.identities.size() == 32);
  CHECK(cy.identities_hold);
  CHECK(cy.calabi_yau);
  CHECK(cy.verdict == "CY-1");

  const Quiver cyc = two_cycle();
  const std::vector<R> fam2{simple<Q>(cyc, 0, Side::Left), simple<Q>(cyc, 1, Side::Left),
                            truncated_injective<Q>(cyc, 0, 2, Side::Left), truncated_injective<Q>(cyc, 1, 2, Side::Left)};
  const auto cy2 = cy_check(cyc, fam2, nakayama<Q>(cyc, 10, 10));
  CHECK(cy2.identities_hold);
  CHECK_FALSE(cy2.calabi_yau);
  CHECK(cy2.verdict.rfind("twisted CY-1", 0) == 0);

  const Quiver pt = no_arrow(2);
  const auto cy0 = cy_check(pt, {simple<Q>(pt, 0, Side::Left), simple<Q>(pt, 1, Side::Left)}, nakayama<Q>(pt, 4, 4));
  CHECK(cy0.verdict == "CY-0");
}

TEST_CASE("Serre identities pin the orientation of sigma", "[regularity][property]") {
  std::mt19937_64 rng(161803);
  const Quiver tri = three_cycle();
  const auto nak = nakayama<Q>(tri, 10, 10);
  auto wrong = nak;
  wrong.twist = nak.twist->inverse();
  int wrong_fails = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<R> fam{random_nilpotent_rep<Q>(tri, random_dims(rng, tri, 2), rng),
                             random_nilpotent_rep<Q>(tri, random_dims(rng, tri, 2), rng)};
    const auto cy = cy_check(tri, fam, nak);
    CHECK(cy.identities_hold);
    CHECK_FALSE(cy.calabi_yau);
    if (!cy_check(tri, fam, wrong).identities_hold) ++wrong_fails;
  }
  CHECK(wrong_fails > 0);
  // simples alone already separate the two directions
  std::vector<R> simples;
  for (Vertex v = 0; v < 3; ++v) simples.push_back(simple<Q>(tri, v, Side::Left));
  CHECK(cy_check(tri, simples, nak).identities_hold);
  CHECK_FALSE(cy_check(tri, simples, wrong).identities_hold);
}

TEST_CASE("Serre identities are symmetric", "[regularity][property]") {
  std::mt19937_64 rng(4);
  for (const Quiver& q : cycle_quivers()) {
    const auto nak = nakayama<Q>(q, 10, 10);
    std::vector<R> fam;
    for (int k = 0; k < 4; ++k) fam.push_back(random_nilpotent_rep<Q>(q, random_dims(rng, q, 2), rng));
    const auto cy = cy_check(q, fam, nak);
    CHECK(cy.identities_hold);
    // lhs at (X, Y, i) equals lhs at (Y, S X, n - i) which is the recorded rhs
    for (const auto& id : cy.identities) CHECK(id.lhs == id.rhs);
  }
}

TEST_CASE("dualizing complex summaries", "[regularity]") {
  const Quiver loop = loop_quiver();
  const auto dl = dualizing_report(loop, nakayama<Q>(loop, 10, 10));
  CHECK(dl.shift == 1);
  CHECK(dl.inner);
  CHECK(dl.summary.find("A itself, shift 1, twist identity => CY-1") != std::string::npos);
  CHECK(dl.evidence_stabilized);

  const Quiver cyc = two_cycle();
  const auto dc = dualizing_report(cyc, nakayama<Q>(cyc, 10, 10));
  CHECK(dc.summary.find("twist vertex swap") != std::string::npos);
  CHECK(dc.summary.find("not inner") != std::string::npos);

  const Quiver pt = no_arrow();
  const auto dp = dualizing_report(pt, nakayama<Q>(pt, 4, 4));
  CHECK(dp.summary.find("A itself, shift 0") != std::string::npos);
}

TEST_CASE("regularity over a prime field", "[regularity]") {
  const ModulusGuard guard(101);
  const auto two = nakayama<Zp>(two_cycle(), 8, 8);
  CHECK(two.consistent);
  CHECK(two.order == 2);
  CHECK(as_regular_check<Zp>(three_cycle(), 10).as_regular);
  CHECK_FALSE(as_regular_check<Zp>(kronecker(), 6).as_regular);
}
