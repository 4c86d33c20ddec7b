#include "pathco/quiver.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace pathco {

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  if (vertex_count_ < 1) throw std::invalid_argument("a quiver needs at least one vertex");
  out_.assign(static_cast<std::size_t>(vertex_count_), {});
  in_.assign(static_cast<std::size_t>(vertex_count_), {});
  std::set<std::string> labels;
  for (ArrowId a = 0; a < arrow_count(); ++a) {
    const Arrow& ar = arrows_[static_cast<std::size_t>(a)];
    if (ar.source < 0 || ar.source >= vertex_count_ || ar.target < 0 || ar.target >= vertex_count_)
      throw std::invalid_argument("arrow '" + ar.label + "' has an endpoint out of range");
    if (!labels.insert(ar.label).second) throw std::invalid_argument("duplicate arrow label '" + ar.label + "'");
    out_[static_cast<std::size_t>(ar.source)].push_back(a);
    in_[static_cast<std::size_t>(ar.target)].push_back(a);
  }
}

std::optional<ArrowId> Quiver::find_arrow(const std::string& label) const {
  for (ArrowId a = 0; a < arrow_count(); ++a)
    if (arrows_[static_cast<std::size_t>(a)].label == label) return a;
  return std::nullopt;
}

Eigen::MatrixXi Quiver::adjacency() const {
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(vertex_count_, vertex_count_);
  for (const Arrow& a : arrows_) ++m(a.target, a.source);
  return m;
}

Quiver opposite(const Quiver& q) {
  std::vector<Arrow> rev;
  rev.reserve(q.arrows().size());
  for (const Arrow& a : q.arrows()) rev.push_back({a.label, a.target, a.source});
  return Quiver(q.vertex_count(), std::move(rev));
}

Path compose(const Path& p, const Path& q) {
  if (p.source != q.target) throw std::invalid_argument("compose: paths are not composable");
  Path r{q.source, p.target, q.arrows};
  r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
  return r;
}

Path reversed(const Path& p) {
  return {p.target, p.source, std::vector<ArrowId>(p.arrows.rbegin(), p.arrows.rend())};
}

std::string to_string(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + std::to_string(p.source + 1);
  std::string s;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!s.empty()) s += '*';
    s += q.arrow(*it).label;
  }
  return s;
}

PathBasis::PathBasis(const Quiver& q, int max_length) : quiver_(q), max_length_(max_length) {
  if (max_length < 0) throw std::invalid_argument("negative path length bound");
  const auto nv = static_cast<std::size_t>(q.vertex_count());
  from_.assign(nv, std::vector<std::vector<Id>>(static_cast<std::size_t>(max_length) + 1));
  into_ = from_;
  by_length_.assign(static_cast<std::size_t>(max_length) + 1, {});
  auto add = [&](Path p) {
    const Id id = static_cast<Id>(paths_.size());
    const auto len = static_cast<std::size_t>(p.length());
    from_[static_cast<std::size_t>(p.source)][len].push_back(id);
    into_[static_cast<std::size_t>(p.target)][len].push_back(id);
    by_length_[len].push_back(id);
    index_.emplace(p, id);
    paths_.push_back(std::move(p));
    return id;
  };
  for (Vertex v = 0; v < q.vertex_count(); ++v) add(Path::trivial(v));
  for (int len = 0; len < max_length; ++len) {
    const std::vector<Id> layer = by_length_[static_cast<std::size_t>(len)];
    for (Id id : layer)
      for (ArrowId a : q.arrows_from(paths_[static_cast<std::size_t>(id)].target)) {
        Path p = paths_[static_cast<std::size_t>(id)];
        p.arrows.push_back(a);
        p.target = q.arrow(a).target;
        add(std::move(p));
      }
  }
  const auto na = static_cast<std::size_t>(q.arrow_count());
  after_.assign(paths_.size(), std::vector<Id>(na, none));
  before_.assign(paths_.size(), std::vector<Id>(na, none));
  for (Id id = 0; id < size(); ++id) {
    const Path& p = paths_[static_cast<std::size_t>(id)];
    if (p.length() >= max_length) continue;
    for (ArrowId a : q.arrows_from(p.target)) {
      Path r = p;
      r.arrows.push_back(a);
      r.target = q.arrow(a).target;
      after_[static_cast<std::size_t>(id)][static_cast<std::size_t>(a)] = index_.at(r);
    }
    for (ArrowId a : q.arrows_into(p.source)) {
      Path r = p;
      r.arrows.insert(r.arrows.begin(), a);
      r.source = q.arrow(a).source;
      before_[static_cast<std::size_t>(id)][static_cast<std::size_t>(a)] = index_.at(r);
    }
  }
}

PathBasis::Id PathBasis::find(const Path& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? none : it->second;
}

PathBasis::Id PathBasis::compose(Id p, Id q) const {
  const Path& pp = path(p);
  const Path& qq = path(q);
  if (pp.source != qq.target || pp.length() + qq.length() > max_length_) return none;
  Id r = q;
  for (ArrowId a : pp.arrows) r = extend_after(r, a);
  return r;
}

std::pair<PathBasis::Id, PathBasis::Id> PathBasis::split(Id id, int k) const {
  const Path& p = path(id);
  if (k < 0 || k > p.length()) throw std::out_of_range("split position outside the path");
  Path inner{p.source, p.source, {p.arrows.begin(), p.arrows.begin() + k}};
  if (k > 0) inner.target = quiver_.arrow(inner.arrows.back()).target;
  Path outer{inner.target, p.target, {p.arrows.begin() + k, p.arrows.end()}};
  return {index_.at(outer), index_.at(inner)};
}

const std::vector<PathBasis::Id>& PathBasis::from(Vertex source, int length) const {
  if (length < 0 || length > max_length_) return empty_;
  return from_[static_cast<std::size_t>(source)][static_cast<std::size_t>(length)];
}

const std::vector<PathBasis::Id>& PathBasis::into(Vertex target, int length) const {
  if (length < 0 || length > max_length_) return empty_;
  return into_[static_cast<std::size_t>(target)][static_cast<std::size_t>(length)];
}

std::vector<PathBasis::Id> PathBasis::between(Vertex source, Vertex target, int length) const {
  std::vector<Id> out;
  for (Id id : from(source, length))
    if (path(id).target == target) out.push_back(id);
  return out;
}

PathBasis enumerate_paths(const Quiver& q, int max_length) { return PathBasis(q, max_length); }

std::vector<long> path_counts(const Quiver& q, int up_to) {
  const Eigen::Matrix<long, -1, -1> adj = q.adjacency().cast<long>();
  Eigen::Matrix<long, -1, -1> d = Eigen::Matrix<long, -1, -1>::Identity(q.vertex_count(), q.vertex_count());
  std::vector<long> out;
  for (int l = 0; l <= up_to; ++l) {
    out.push_back(d.sum());
    d = adj * d;
  }
  return out;
}

namespace {

// Tarjan's strongly connected components; comp[v] is the component index.
std::vector<int> strong_components(const Quiver& q, int& count) {
  const int n = q.vertex_count();
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
      comp(static_cast<std::size_t>(n), -1);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  int next = 0;
  count = 0;
  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = next++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (ArrowId a : q.arrows_from(v)) {
      const int w = q.arrow(a).target;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp[w] = count;
      } while (w != v);
      ++count;
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  return comp;
}

// Shortest path from u to v using only arrows accepted by `allowed`.
std::optional<Path> shortest_path(const Quiver& q, Vertex u, Vertex v, const std::function<bool(ArrowId)>& allowed) {
  std::vector<ArrowId> via(static_cast<std::size_t>(q.vertex_count()), -1);
  std::vector<char> seen(static_cast<std::size_t>(q.vertex_count()), 0);
  std::deque<Vertex> todo{u};
  seen[u] = 1;
  while (!todo.empty()) {
    const Vertex x = todo.front();
    todo.pop_front();
    if (x == v) break;
    for (ArrowId a : q.arrows_from(x)) {
      const Vertex y = q.arrow(a).target;
      if (!allowed(a) || seen[y]) continue;
      seen[y] = 1;
      via[y] = a;
      todo.push_back(y);
    }
  }
  if (!seen[v]) return std::nullopt;
  Path p{u, v, {}};
  for (Vertex x = v; x != u;) {
    const ArrowId a = via[x];
    p.arrows.push_back(a);
    x = q.arrow(a).source;
  }
  std::reverse(p.arrows.begin(), p.arrows.end());
  return p;
}

Path power(const Path& cycle, int k) {
  Path r = Path::trivial(cycle.source);
  for (int i = 0; i < k; ++i) r = compose(cycle, r);
  return r;
}

}  // namespace

GrowthVerdict growth_gate(const Quiver& q) {
  GrowthVerdict out;
  int ncomp = 0;
  const std::vector<int> comp = strong_components(q, ncomp);
  std::vector<int> comp_vertices(static_cast<std::size_t>(ncomp), 0), comp_edges(static_cast<std::size_t>(ncomp), 0);
  for (Vertex v = 0; v < q.vertex_count(); ++v) ++comp_vertices[comp[v]];
  for (const Arrow& a : q.arrows())
    if (comp[a.source] == comp[a.target]) ++comp_edges[comp[a.source]];
  auto cyclic = [&](int c) { return comp_edges[c] > 0; };
  auto inside = [&](int c) { return [&q, &comp, c](ArrowId a) { return comp[q.arrow(a).source] == c && comp[q.arrow(a).target] == c; }; };
  auto any_arrow = [](ArrowId) { return true; };

  // closed walk at v inside its component starting with arrow a
  auto cycle_through = [&](Vertex v, ArrowId a) {
    Path first = Path::of_arrow(q, a);
    return compose(*shortest_path(q, q.arrow(a).target, v, inside(comp[v])), first);
  };

  for (int c = 0; c < ncomp; ++c) {
    if (!cyclic(c) || comp_edges[c] == comp_vertices[c]) continue;
    // more arrows than vertices: some vertex has two arrows leaving inside the component
    for (Vertex v = 0; v < q.vertex_count(); ++v) {
      if (comp[v] != c) continue;
      std::vector<ArrowId> inner;
      for (ArrowId a : q.arrows_from(v))
        if (comp[q.arrow(a).target] == c) inner.push_back(a);
      if (inner.size() < 2) continue;
      const Path c1 = cycle_through(v, inner[0]);
      const Path c2 = cycle_through(v, inner[1]);
      out.bounded = false;
      out.witness_source = out.witness_target = v;
      if (c1.length() == c2.length()) {
        out.witness_first = c1;
        out.witness_second = c2;
      } else {
        out.witness_first = compose(c1, c2);
        out.witness_second = compose(c2, c1);
      }
      out.reason = "two distinct cycles pass through one vertex";
      return out;
    }
  }

  for (int c1 = 0; c1 < ncomp; ++c1) {
    if (!cyclic(c1)) continue;
    for (Vertex u = 0; u < q.vertex_count(); ++u) {
      if (comp[u] != c1) continue;
      for (Vertex w = 0; w < q.vertex_count(); ++w) {
        if (comp[w] == c1 || !cyclic(comp[w])) continue;
        auto bridge = shortest_path(q, u, w, any_arrow);
        if (!bridge) continue;
        const Path cu = cycle_through(u, [&] {
          for (ArrowId a : q.arrows_from(u))
            if (comp[q.arrow(a).target] == c1) return a;
          return ArrowId{-1};
        }());
        const Path cw = cycle_through(w, [&] {
          for (ArrowId a : q.arrows_from(w))
            if (comp[q.arrow(a).target] == comp[w]) return a;
          return ArrowId{-1};
        }());
        out.bounded = false;
        out.witness_source = u;
        out.witness_target = w;
        out.witness_first = compose(*bridge, power(cu, cw.length()));
        out.witness_second = compose(power(cw, cu.length()), *bridge);
        out.reason = "a path joins two distinct cycles";
        return out;
      }
    }
  }

  out.bounded = true;
  // artinian: every weak component is acyclic or a single oriented cycle
  {
    std::vector<int> weak(static_cast<std::size_t>(q.vertex_count()), -1);
    int nweak = 0;
    for (Vertex s = 0; s < q.vertex_count(); ++s) {
      if (weak[s] >= 0) continue;
      std::deque<Vertex> todo{s};
      weak[s] = nweak;
      while (!todo.empty()) {
        Vertex x = todo.front();
        todo.pop_front();
        auto visit = [&](Vertex y) {
          if (weak[y] < 0) {
            weak[y] = nweak;
            todo.push_back(y);
          }
        };
        for (ArrowId a : q.arrows_from(x)) visit(q.arrow(a).target);
        for (ArrowId a : q.arrows_into(x)) visit(q.arrow(a).source);
      }
      ++nweak;
    }
    std::vector<int> wv(static_cast<std::size_t>(nweak), 0), we(static_cast<std::size_t>(nweak), 0);
    std::vector<char> has_cycle(static_cast<std::size_t>(nweak), 0), has_acyclic(static_cast<std::size_t>(nweak), 0);
    for (Vertex v = 0; v < q.vertex_count(); ++v) {
      ++wv[weak[v]];
      (cyclic(comp[v]) ? has_cycle : has_acyclic)[weak[v]] = 1;
    }
    for (const Arrow& a : q.arrows()) ++we[weak[a.source]];
    out.artinian = true;
    for (int w = 0; w < nweak; ++w)
      if (has_cycle[w] && (has_acyclic[w] || we[w] != wv[w])) out.artinian = false;
  }

  // eventual period of adjacency powers
  using LMat = Eigen::Matrix<long, -1, -1>;
  const LMat adj = q.adjacency().cast<long>();
  std::vector<LMat> seen{LMat::Identity(q.vertex_count(), q.vertex_count())};
  for (int l = 1;; ++l) {
    LMat next = adj * seen.back();
    for (int k = 0; k < l; ++k)
      if (seen[static_cast<std::size_t>(k)] == next) {
        out.preperiod = k;
        out.period = l - k;
        for (const LMat& m : seen) out.max_paths_per_degree = std::max(out.max_paths_per_degree, m.sum());
        out.reason = out.artinian ? "every component is acyclic or one oriented cycle"
                                  : "path counts are bounded but a cycle has an entering or leaving arrow";
        return out;
      }
    seen.push_back(std::move(next));
  }
}

QuiverDocument parse_quiver_document(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::optional<int> vertices;
  std::vector<Arrow> arrows;
  std::vector<int> arrow_lines;
  std::optional<FieldSpec> field;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "vertices:" || head == "vertices") {
      if (vertices) throw ParseError(lineno, "vertex count given twice");
      long n = 0;
      std::string extra;
      if (!(ls >> n) || (ls >> extra)) throw ParseError(lineno, "expected 'vertices: <n>'");
      if (n < 1) throw ParseError(lineno, "a quiver needs at least one vertex");
      vertices = static_cast<int>(n);
    } else if (head == "arrow") {
      if (!vertices) throw ParseError(lineno, "'vertices:' must come before any arrow");
      Arrow a;
      long s = 0, t = 0;
      std::string extra;
      if (!(ls >> a.label >> s >> t) || (ls >> extra))
        throw ParseError(lineno, "expected 'arrow <label> <source> <target>'");
      if (s < 1 || s > *vertices || t < 1 || t > *vertices)
        throw ParseError(lineno, "vertex out of range 1.." + std::to_string(*vertices));
      for (std::size_t k = 0; k < arrows.size(); ++k)
        if (arrows[k].label == a.label)
          throw ParseError(lineno, "duplicate label '" + a.label + "' (first used on line " +
                                       std::to_string(arrow_lines[k]) + ")");
      a.source = static_cast<Vertex>(s - 1);
      a.target = static_cast<Vertex>(t - 1);
      arrows.push_back(a);
      arrow_lines.push_back(lineno);
    } else if (head == "field:" || head == "field") {
      std::string spec, extra;
      if (!(ls >> spec) || (ls >> extra)) throw ParseError(lineno, "expected 'field: Q' or 'field: F<p>'");
      try {
        field = FieldSpec::parse(spec);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
    } else {
      throw ParseError(lineno, "unrecognised directive '" + head + "'");
    }
  }
  if (!vertices) throw ParseError(lineno, "missing 'vertices: <n>' line");
  return {Quiver(*vertices, std::move(arrows)), field};
}

Quiver parse_quiver(const std::string& text) { return parse_quiver_document(text).quiver; }

QuiverDocument load_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open quiver file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_quiver_document(buf.str());
}

std::string format_quiver(const Quiver& q) {
  std::ostringstream out;
  out << "vertices: " << q.vertex_count() << '\n';
  for (const Arrow& a : q.arrows()) out << "arrow " << a.label << ' ' << a.source + 1 << ' ' << a.target + 1 << '\n';
  return out.str();
}

}  // namespace pathco
