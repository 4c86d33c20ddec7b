// Acceptance criteria AC1..AC8: one PASS/FAIL line each, exit status 1 if any fails.
//
// usage: acceptance <pathco binary> <quiver directory>
#include "pathco/regularity.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <tuple>

using namespace pathco;
using namespace fixtures;
using Q = Rational;
using R = Rep<Q>;
using Clock = std::chrono::steady_clock;

namespace {

/// Collects failed conditions of one criterion.
class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)), start_(Clock::now()) {}

  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  double seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

  bool report() const {
    std::cout << (failed_ == 0 ? "PASS " : "FAIL ") << name_ << " (" << checks_ << " checks, " << failed_
              << " failed, " << seconds() << " s)\n";
    for (const auto& f : failures_) std::cout << "    " << f << '\n';
    return failed_ == 0;
  }

 private:
  std::string name_;
  Clock::time_point start_;
  long checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

template <class F>
void guarded(Criterion& c, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
}

R jordan(const Quiver& loop, int a) {
  Matrix<Q> m = Matrix<Q>::Zero(a, a);
  for (int k = 0; k + 1 < a; ++k) m(k + 1, k) = Q(1);
  return rep_from_matrices<Q>(loop, {a}, {m}, Side::Left);
}

long euler_form(const R& m, const R& n) {
  const Quiver& q = m.quiver();
  long e = 0;
  for (Vertex v = 0; v < q.vertex_count(); ++v) e += static_cast<long>(m.dim(v)) * n.dim(v);
  for (ArrowId a = 0; a < q.arrow_count(); ++a) e -= static_cast<long>(m.dim(q.arrow(a).source)) * n.dim(q.arrow(a).target);
  return e;
}

std::string str(long x) { return std::to_string(x); }

int run_cli(const std::string& binary, const std::string& args) {
  const std::string cmd = "\"" + binary + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<Quiver> property_quivers() { return {loop_quiver(), two_cycle(), three_cycle(), kronecker()}; }

bool ac1() {
  Criterion c("AC1 Ext_C(C, S_j) on the 2-cycle, N = 8");
  guarded(c, [&] {
    const Quiver q = two_cycle();
    for (Vertex j = 0; j < 2; ++j) {
      const auto e0 = ext_comodule_C<Q>(q, j, 0, 8);
      const auto e1 = ext_comodule_C<Q>(q, j, 1, 8);
      const std::string s = "S" + str(j + 1);
      c.require(e0.dimension == 0, "Ext^0(C, " + s + ") = " + str(e0.dimension));
      c.require(e1.dimension == 1, "Ext^1(C, " + s + ") = " + str(e1.dimension));
      std::vector<long> support(2, 0);
      support[static_cast<std::size_t>(1 - j)] = 1;
      c.require(e1.vertex_support == support, "Ext^1(C, " + s + ") not supported at the other vertex");
      c.require(e1.certificate.certified, "Ext^1(C, " + s + ") not certified");
      c.require(e1.module && is_isomorphic(*e1.module, simple<Q>(q, 1 - j, Side::Right)),
                "Ext^1(C, " + s + ") is not T" + str(2 - j));
    }
  });
  c.require(c.seconds() < 1.0, "runtime " + std::to_string(c.seconds()) + " s");
  return c.report();
}

bool ac2() {
  Criterion c("AC2 loop quiver is AS-regular of dimension 1 and CY-1");
  guarded(c, [&] {
    const Quiver q = loop_quiver();
    const auto reg = as_regular_check<Q>(q, 10);
    c.require(reg.as_regular && reg.gldim == 1, "loop not AS-regular with n = 1");
    const auto nak = nakayama<Q>(q, 10, 10);
    c.require(nak.twist && nak.twist->is_identity_on_vertices(), "Nakayama vertex map not the identity");
    c.require(nak.inner.verdict == Innerness::Inner, "Nakayama twist not inner");
    std::vector<R> family;
    for (int j = 1; j <= 4; ++j) family.push_back(jordan(q, j));
    const auto cy = cy_check(q, family, nak);
    c.require(cy.identities.size() == 32, "expected 32 identities, got " + str(static_cast<long>(cy.identities.size())));
    for (const auto& id : cy.identities) {
      // independent oracle: Ext^i(k[x]/x^a, k[x]/x^b) = min(a, b) for i = 0, 1
      const long oracle = std::min(id.x + 1, id.y + 1);
      c.require(id.lhs == oracle && id.rhs == oracle && id.lhs == id.rhs,
                "identity fails at x = " + str(id.x + 1) + ", y = " + str(id.y + 1) + ", i = " + str(id.degree));
    }
    c.require(cy.verdict == "CY-1", "verdict '" + cy.verdict + "'");
  });
  c.require(c.seconds() < 1.0, "runtime " + std::to_string(c.seconds()) + " s");
  return c.report();
}

bool ac3() {
  Criterion c("AC3 local cohomology of A matches C under the Nakayama twist, m_max = N = 10");
  guarded(c, [&] {
    for (const Quiver& q : {loop_quiver(), two_cycle()}) {
      const auto nak = nakayama<Q>(q, 10, 10);
      const auto h0 = local_cohomology<Q>(q, 0, 10, 10);
      for (const auto& d : h0.dims) c.require(d.sum() == 0, "H^0 nonzero");
      const auto h1 = local_cohomology<Q>(q, 1, 10, 10);
      c.require(h1.stabilized, "H^1 not stabilised");
      c.require(h1.certified_through >= 8, "H^1 certified only through " + str(h1.certified_through));
      c.require(nak.twist.has_value(), "no Nakayama twist");
      if (!nak.twist) continue;
      const auto paths = bigraded_dims(q, 8);
      for (int l = 0; l <= 8 && l < static_cast<int>(h1.dims.size()); ++l)
        for (Vertex j = 0; j < q.vertex_count(); ++j)
          for (Vertex v = 0; v < q.vertex_count(); ++v) {
            const int sv = nak.twist->vertex_map[static_cast<std::size_t>(v)];
            c.require(h1.dims[static_cast<std::size_t>(l)](j, v) == paths[static_cast<std::size_t>(l)](sv, j),
                      "H^1 degree " + str(l) + " entry (" + str(j + 1) + ", " + str(v + 1) + ")");
          }
    }
  });
  return c.report();
}

bool ac4() {
  Criterion c("AC4 Ext^1(M, A) = Rat(M) and Ext^0(M, A) = Ext^0(M / Rat M, A)");
  guarded(c, [&] {
    std::mt19937_64 rng(20260101);
    for (const Quiver& q : cycle_quivers()) {
      for (int trial = 0; trial < 12; ++trial) {
        const R m = random_nilpotent_rep<Q>(q, random_dims(rng, q, 3), rng);
        // M is finite-dimensional, so Rat(M) = M and M / Rat(M) = 0
        const auto e1 = ext_vs_algebra(m, 1, 12);
        const auto e0 = ext_vs_algebra(m, 0, 12);
        const auto e0_quotient = ext_vs_algebra(R::zero(q, Side::Left), 0, 12);
        c.require(e1.certificate.certified, "Ext^1 not certified");
        c.require(e1.dimension == m.total_dim(),
                  "dim Ext^1 = " + str(e1.dimension) + " but dim Rat(M) = " + str(m.total_dim()));
        c.require(e0.dimension == e0_quotient.dimension, "Ext^0(M, A) != Ext^0(M / Rat M, A)");
        // the torsion-free quotient has no Ext^1, so Rat(M) accounts for all of it
        c.require(ext_vs_algebra(R::zero(q, Side::Left), 1, 12).dimension == 0, "Ext^1 of zero");
      }
      // finitely generated M with a torsion part and a free part
      for (int trial = 0; trial < 10; ++trial) {
        const auto p = random_presentation<Q>(q, rng, 16);
        const auto rat = rational_part(p, 16);
        c.require(rat.certificate.certified, "rational part not certified");
        if (!rat.certificate.certified) continue;
        const auto e1 = ext_vs_algebra(p, 1, 16);
        c.require(e1.certificate.certified && e1.dimension == rat.dimension,
                  "presented M: dim Ext^1 = " + str(e1.dimension) + ", dim Rat = " + str(rat.dimension));
        const auto quotient = modulo_rational(p, rat);
        const auto a = ext_vs_algebra(p, 0, 16), b = ext_vs_algebra(quotient, 0, 16);
        bool same = a.graded && b.graded;
        for (int d = -2; same && d <= 8; ++d)
          for (Vertex v = 0; v < q.vertex_count(); ++v) same = same && a.graded->at(d, v) == b.graded->at(d, v);
        c.require(same, "presented M: Ext^0 changes under M -> M / Rat M");
      }
    }
  });
  return c.report();
}

bool ac5(const std::string& cli, const std::string& dir) {
  Criterion c("AC5 negative controls and exit codes");
  guarded(c, [&] {
    const Quiver kr = kronecker();
    const auto v = as_regular_check<Q>(kr, 8);
    c.require(!v.as_regular, "Kronecker reported AS-regular");
    bool sink = false, source = false;
    for (const auto& w : v.left.witnesses) {
      sink = sink || (w.simple == 1 && w.degree == 0 && w.dimension == 3);
      source = source || (w.simple == 0 && w.degree == 1 && w.dimension == 5);
    }
    c.require(sink, "no sink-simple degree-0 witness of dimension 3");
    c.require(source, "no source-simple degree-1 witness of dimension 5");
    // hand resolution of the source simple: 0 -> (A e_2)^2 -> A e_1 -> S_1 -> 0
    const auto res = minimalize(standard_resolution(simple<Q>(kr, 0, Side::Left)), 6);
    c.require(betti_numbers(res) == std::vector<std::vector<int>>{{1, 0}, {0, 2}}, "minimal resolution ranks");

    const GrowthVerdict g = growth_gate(two_loops());
    c.require(!g.bounded, "two loops passed the gate");
    c.require(g.witness_first && g.witness_second && *g.witness_first != *g.witness_second,
              "gate gave no pair of distinct cycles");

    c.require(run_cli(cli, "--quiver " + dir + "/two_loops.txt gate") == 3, "gate failure exit code");
    c.require(run_cli(cli, "--quiver " + dir + "/two_loops.txt gate --force") == 0, "forced gate exit code");
    c.require(run_cli(cli, "--quiver " + dir + "/kronecker.txt asreg --trunc 8") == 0, "negative verdict exit code");
    c.require(run_cli(cli, "--quiver " + dir + "/kronecker.txt nakayama --trunc 8") == 0, "not regular exit code");
    c.require(run_cli(cli, "--quiver " + dir + "/no_such_file.txt gate") == 2, "parse error exit code");
    c.require(run_cli(cli, "--quiver " + dir + "/three_cycle.txt ext --module C --target S1 --trunc 2") == 4,
              "stabilization failure exit code");
    c.require(run_cli(cli, "--quiver " + dir + "/two_cycle.txt ext --module C --target S1 --trunc 8") == 0,
              "successful run exit code");
  });
  return c.report();
}

bool ac6() {
  Criterion c("AC6 natural map is a bijection, both sides agree, 3-cycle twist has order 3 and is not inner");
  guarded(c, [&] {
    for (const Quiver& q : {loop_quiver(), two_cycle(), three_cycle(), no_arrow(), no_arrow(3)}) {
      const auto v = as_regular_check<Q>(q, 10);
      c.require(v.as_regular, "instance not AS-regular");
      c.require(v.sides_agree, "left and right verdicts disagree");
      c.require(v.natural_bijective, "natural map not a bijection");
      std::vector<Vertex> sorted = v.left.natural;
      std::sort(sorted.begin(), sorted.end());
      for (Vertex k = 0; k < q.vertex_count(); ++k)
        c.require(static_cast<std::size_t>(k) < sorted.size() && sorted[static_cast<std::size_t>(k)] == k,
                  "natural map misses a vertex");
    }
    const auto tri = nakayama<Q>(three_cycle(), 10, 10);
    c.require(tri.order == 3, "3-cycle twist order " + str(tri.order));
    c.require(tri.consistent, "twist disagrees with the natural map");
    c.require(tri.inner.verdict == Innerness::NotInner, "3-cycle twist reported inner");
  });
  return c.report();
}

bool ac7() {
  Criterion c("AC7 property suites, 100 seeded cases per quiver each");
  guarded(c, [&] {
    std::mt19937_64 rng(77);
    for (const Quiver& q : property_quivers()) {
      const std::string name = "(" + str(q.vertex_count()) + " vertices, " + str(q.arrow_count()) + " arrows) ";
      // Euler form, Hom duality, double-dual roundtrip of complexes
      for (int k = 0; k < 100; ++k) {
        const R m = random_nilpotent_rep<Q>(q, random_dims(rng, q, 2), rng);
        const R n = random_nilpotent_rep<Q>(q, random_dims(rng, q, 2), rng);
        c.require(ext_fd(m, n, 0).dimension - ext_fd(m, n, 1).dimension == euler_form(m, n), name + "Euler form");
        c.require(hom_dimension(m, n) == hom_dimension(linear_dual(n), linear_dual(m)), name + "Hom duality");
        Morphism<Q> f;
        for (Vertex v = 0; v < q.vertex_count(); ++v) f.push_back(Matrix<Q>::Zero(n.dim(v), m.dim(v)));
        for (const auto& h : hom_space(m, n)) {
          const Q coef(static_cast<int>(rng() % 5) - 2);
          for (std::size_t v = 0; v < h.size(); ++v) f[v] += coef * h[v];
        }
        const RepComplex<Q> cx{0, {m, n}, {f}};
        const RepComplex<Q> back = dualize_complex(dualize_complex(cx));
        c.require(back.first_degree == 0 && back.differentials[0] == f && is_isomorphic(back.terms[0], m) &&
                      is_isomorphic(back.terms[1], n),
                  name + "double-dual complex roundtrip");
        c.require(cx.cohomology_dims()[0] == dualize_complex(cx).cohomology_dims()[1], name + "dual cohomology");
      }
      // coassociativity and counit on random basis paths
      const PathCoalgebra coalg(q, 8);
      const auto& b = coalg.basis();
      for (int k = 0; k < 100; ++k) {
        const auto p = static_cast<PathBasis::Id>(rng() % static_cast<std::uint64_t>(b.size()));
        std::vector<std::tuple<int, int, int>> left, right;
        int counit_left = 0, counit_right = 0;
        for (auto [outer, inner] : coalg.comultiply(p)) {
          for (auto [o2, i2] : coalg.comultiply(outer)) left.emplace_back(o2, i2, inner);
          for (auto [o2, i2] : coalg.comultiply(inner)) right.emplace_back(outer, o2, i2);
          if (coalg.counit(outer) && inner == p) ++counit_left;
          if (coalg.counit(inner) && outer == p) ++counit_right;
        }
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        c.require(left == right, name + "coassociativity");
        c.require(counit_left == 1 && counit_right == 1, name + "counit");
      }
      // convolution associativity against the coproduct
      const int n = 5;
      const PathBasis pb(q, n);
      auto random_element = [&] {
        DualElement<Q> e;
        for (PathBasis::Id id = 0; id < pb.size(); ++id)
          if (rng() % 3 == 0) e.add(pb.path(id), Q(static_cast<int>(rng() % 9) - 4));
        return e;
      };
      for (int k = 0; k < 100; ++k) {
        const auto f = random_element(), g = random_element(), h = random_element();
        c.require(convolve(convolve(f, g, n), h, n) == convolve(f, convolve(g, h, n), n), name + "convolution");
      }
      // phi-check through degree 6 and graded finality under N -> N + 2
      for (int k = 0; k < 100; ++k) {
        const auto p = random_presentation<Q>(q, rng, 12);
        c.require(hom_into_C(p, 6).phi_check, name + "phi-check");
        const auto small = ext_vs_algebra(p, k % 2, 12), large = ext_vs_algebra(p, k % 2, 14);
        bool same = small.graded && large.graded;
        for (int d = small.graded ? small.graded->first_degree : 0; same && d <= small.graded->last_degree(); ++d)
          for (Vertex v = 0; v < q.vertex_count(); ++v) same = same && small.graded->at(d, v) == large.graded->at(d, v);
        c.require(same, name + "graded finality");
      }
    }
  });
  return c.report();
}

bool ac8() {
  Criterion c("AC8 dual resolution exact degreewise through degree 6");
  guarded(c, [&] {
    std::mt19937_64 rng(8);
    for (const Quiver& q : cycle_quivers()) {
      int tested = 0;
      while (tested < 6) {
        const auto p = random_presentation<Q>(q, rng, 8);
        if (p.relations.source().rank() == 0) continue;  // keep presentations with relations
        const auto check = dual_resolution_check(p, 6);
        c.require(check.exact && check.composes_to_zero, "dual resolution not exact");
        const int lo = p.generators().min_degree();
        c.require(!check.rows.empty() && check.rows.front().degree <= lo && check.rows.back().degree == 6 &&
                      check.rows.back().degree - check.rows.front().degree + 1 == static_cast<int>(check.rows.size()),
                  "degrees checked do not run from the lowest generator through 6");
        for (const auto& row : check.rows)
          c.require(row.module_dim == row.f0 - row.rank_d1 && row.f1 == row.rank_d1 + row.rank_d2 &&
                        row.f2 == row.rank_d2,
                    "rank identity fails in degree " + str(row.degree));
        ++tested;
      }
    }
  });
  return c.report();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <pathco binary> <quiver directory>\n";
    return 2;
  }
  const std::vector<std::function<bool()>> all{
      ac1, ac2, ac3, ac4, [&] { return ac5(argv[1], argv[2]); }, ac6, ac7, ac8};
  int failed = 0;
  for (const auto& ac : all) failed += ac() ? 0 : 1;
  std::cout << (failed == 0 ? "all acceptance criteria pass" : std::to_string(failed) + " criteria FAIL") << '\n';
  return failed == 0 ? 0 : 1;
}
