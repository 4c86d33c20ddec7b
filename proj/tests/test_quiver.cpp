#include "pathco/quiver.hpp"

#include <catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace pathco;

namespace {

const char* kLoop = "vertices: 1\narrow x 1 1\n";
const char* kTwoCycle = "vertices: 2\narrow x 1 2\narrow y 2 1\n";
const char* kKronecker = "vertices: 2\narrow x 1 2\narrow y 1 2\n";
const char* kTwoLoops = "vertices: 1\narrow x 1 1\narrow y 1 1\n";

// Independent depth-first count of paths of each length between each pair.
long dfs_count(const Quiver& q, Vertex from, Vertex to, int len) {
  if (len == 0) return from == to ? 1 : 0;
  long total = 0;
  for (const Arrow& a : q.arrows())
    if (a.source == from) total += dfs_count(q, a.target, to, len - 1);
  return total;
}

Quiver random_quiver(std::mt19937& rng) {
  std::uniform_int_distribution<int> nv(1, 4), na(0, 5);
  const int n = nv(rng);
  std::uniform_int_distribution<int> v(0, n - 1);
  std::vector<Arrow> arrows;
  const int m = na(rng);
  for (int k = 0; k < m; ++k) arrows.push_back({"a" + std::to_string(k), v(rng), v(rng)});
  return Quiver(n, arrows);
}

}  // namespace

TEST_CASE("parse quiver files", "[quiver]") {
  const Quiver loop = parse_quiver(kLoop);
  CHECK(loop.vertex_count() == 1);
  REQUIRE(loop.arrow_count() == 1);
  CHECK(loop.arrow(0).source == 0);
  CHECK(loop.arrow(0).target == 0);

  const Quiver cyc = parse_quiver(kTwoCycle);
  CHECK(cyc.arrow(0).source == 0);
  CHECK(cyc.arrow(0).target == 1);
  CHECK(cyc.arrow(1).source == 1);

  try {
    parse_quiver("vertices: 2\narrow x 1 2\narrow x 2 1");
    FAIL("duplicate label accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_quiver("vertices: 2\narrow x 1 3"), ParseError);
  CHECK_THROWS_AS(parse_quiver("vertices: 2\nbogus"), ParseError);
  CHECK_THROWS_AS(parse_quiver("arrow x 1 1"), ParseError);
  CHECK_THROWS_AS(parse_quiver("vertices: 0"), ParseError);

  const QuiverDocument doc = parse_quiver_document("# comment\nvertices: 1 # one\nfield: F<7>\narrow x 1 1\n");
  REQUIRE(doc.field);
  CHECK(doc.field->characteristic == 7);
  CHECK(parse_quiver(format_quiver(cyc)) == cyc);
}

TEST_CASE("enumerate paths", "[quiver]") {
  const PathBasis loop = enumerate_paths(parse_quiver(kLoop), 3);
  for (int l = 0; l <= 3; ++l) CHECK(loop.of_length(l).size() == 1);

  const PathBasis cyc = enumerate_paths(parse_quiver(kTwoCycle), 4);
  for (Vertex s = 0; s < 2; ++s)
    for (int l = 0; l <= 4; ++l) {
      REQUIRE(cyc.from(s, l).size() == 1);
      const Path& p = cyc.path(cyc.from(s, l).front());
      CHECK((p.target == s) == (l % 2 == 0));
    }

  const PathBasis bare = enumerate_paths(Quiver(1, {}), 5);
  CHECK(bare.size() == 1);
}

TEST_CASE("path basis navigation", "[quiver]") {
  const Quiver q = parse_quiver(kTwoCycle);
  const PathBasis b(q, 5);
  const PathBasis::Id x = b.extend_after(b.trivial(0), 0);
  REQUIRE(x != PathBasis::none);
  const PathBasis::Id yx = b.extend_after(x, 1);
  CHECK(to_string(q, b.path(yx)) == "y*x");
  CHECK(b.extend_before(b.find(Path::of_arrow(q, 1)), 0) == yx);
  CHECK(b.compose(b.find(Path::of_arrow(q, 1)), x) == yx);
  CHECK(b.compose(x, x) == PathBasis::none);
  const auto [outer, inner] = b.split(yx, 1);
  CHECK(b.path(outer) == Path::of_arrow(q, 1));
  CHECK(b.path(inner) == Path::of_arrow(q, 0));
}

TEST_CASE("growth gate verdicts", "[quiver]") {
  const GrowthVerdict cyc = growth_gate(parse_quiver(kTwoCycle));
  CHECK(cyc.bounded);
  CHECK(cyc.period == 2);
  CHECK(cyc.artinian);

  const Quiver two_loops = parse_quiver(kTwoLoops);
  const GrowthVerdict two = growth_gate(two_loops);
  CHECK_FALSE(two.bounded);
  REQUIRE(two.witness_first);
  REQUIRE(two.witness_second);
  CHECK(two.witness_first->length() == 1);
  CHECK(two.witness_second->length() == 1);
  CHECK(*two.witness_first != *two.witness_second);

  const GrowthVerdict kron = growth_gate(parse_quiver(kKronecker));
  CHECK(kron.bounded);
  CHECK(kron.artinian);
  CHECK(path_counts(parse_quiver(kKronecker), 4) == std::vector<long>{2, 2, 0, 0, 0});

  // a loop feeding a sink: bounded but not a disjoint union of cycles
  const GrowthVerdict tail = growth_gate(parse_quiver("vertices: 2\narrow x 1 1\narrow a 1 2\n"));
  CHECK(tail.bounded);
  CHECK_FALSE(tail.artinian);

  // a cycle feeding another cycle grows linearly
  const Quiver chain = parse_quiver("vertices: 2\narrow x 1 1\narrow a 1 2\narrow y 2 2\n");
  const GrowthVerdict ch = growth_gate(chain);
  CHECK_FALSE(ch.bounded);
  REQUIRE(ch.witness_first);
  CHECK(ch.witness_first->length() == ch.witness_second->length());
  CHECK(ch.witness_first->source == ch.witness_source);
  CHECK(ch.witness_second->target == ch.witness_target);
}

TEST_CASE("opposite quiver", "[quiver]") {
  const Quiver loop = parse_quiver(kLoop);
  CHECK(opposite(loop) == loop);
  const Quiver kr = parse_quiver(kKronecker);
  for (const Arrow& a : opposite(kr).arrows()) {
    CHECK(a.source == 1);
    CHECK(a.target == 0);
  }
  const Quiver cyc = opposite(parse_quiver(kTwoCycle));
  CHECK(cyc.arrow(0).label == "x");
  CHECK(cyc.arrow(0).source == 1);
  CHECK(cyc.arrow(0).target == 0);
}

TEST_CASE("path counts follow adjacency powers", "[quiver][property]") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 120; ++trial) {
    const Quiver q = random_quiver(rng);
    const int len = 4;
    const PathBasis b(q, len);
    for (Vertex s = 0; s < q.vertex_count(); ++s)
      for (Vertex t = 0; t < q.vertex_count(); ++t)
        for (int l = 0; l <= len; ++l) {
          const auto found = b.between(s, t, l);
          CHECK(static_cast<long>(found.size()) == dfs_count(q, s, t, l));
          std::set<Path> unique;
          for (auto id : found) unique.insert(b.path(id));
          CHECK(unique.size() == found.size());
        }
  }
}

TEST_CASE("bounded quivers are eventually periodic with the reported period", "[quiver][property]") {
  std::mt19937 rng(5);
  int bounded_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Quiver q = random_quiver(rng);
    const GrowthVerdict g = growth_gate(q);
    const int horizon = 40;
    const auto counts = path_counts(q, horizon);
    if (!g.bounded) {
      // witness paths are genuine, distinct and of equal length
      REQUIRE(g.witness_first);
      CHECK(*g.witness_first != *g.witness_second);
      CHECK(g.witness_first->length() == g.witness_second->length());
      const auto early = path_counts(q, 12);
      CHECK(early[12] > early[6]);
      continue;
    }
    ++bounded_seen;
    for (int l = g.preperiod; l + g.period <= horizon; ++l)
      CHECK(counts[static_cast<std::size_t>(l)] == counts[static_cast<std::size_t>(l + g.period)]);
    for (long c : counts) CHECK(c <= g.max_paths_per_degree);
  }
  CHECK(bounded_seen >= 100);
}

TEST_CASE("opposite enumeration swaps endpoints", "[quiver][property]") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Quiver q = random_quiver(rng);
    CHECK(opposite(opposite(q)) == q);
    const PathBasis b(q, 3), bo(opposite(q), 3);
    CHECK(b.size() == bo.size());
    for (PathBasis::Id id = 0; id < b.size(); ++id) CHECK(bo.find(reversed(b.path(id))) != PathBasis::none);
  }
}
