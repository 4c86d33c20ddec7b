#include "pathco/repmod.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace pathco {

namespace {

template <class S>
Matrix<S> zeros(int r, int c) {
  return Matrix<S>::Zero(r, c);
}

// Left Rep over q from labelled basis vectors and a basis-level action.
// act(a, k) returns the basis index hit by arrow a from basis vector k, or -1.
template <class S>
Rep<S> left_rep_from_basis(const Quiver& q, const std::vector<Vertex>& where,
                           const std::function<int(ArrowId, int)>& act) {
  std::vector<int> dims(static_cast<std::size_t>(q.vertex_count()), 0);
  std::vector<int> local(where.size());
  for (std::size_t k = 0; k < where.size(); ++k) local[k] = dims[static_cast<std::size_t>(where[k])]++;
  std::vector<Matrix<S>> maps;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix<S> m = zeros<S>(dims[static_cast<std::size_t>(ar.target)], dims[static_cast<std::size_t>(ar.source)]);
    for (std::size_t k = 0; k < where.size(); ++k) {
      if (where[k] != ar.source) continue;
      const int hit = act(a, static_cast<int>(k));
      if (hit >= 0) m(local[static_cast<std::size_t>(hit)], local[k]) = S(1);
    }
    maps.push_back(std::move(m));
  }
  return Rep<S>(q, Side::Left, std::move(dims), std::move(maps));
}

// Reinterpret a left Rep over opposite(q) as a right Rep over q.
template <class S>
Rep<S> as_right_over(const Quiver& q, const Rep<S>& left_over_opposite) {
  return Rep<S>(q, Side::Right, left_over_opposite.dims(), left_over_opposite.maps());
}

template <class S>
S random_scalar(std::mt19937_64& rng, long long lo, long long hi) {
  std::uniform_int_distribution<long long> d(lo, hi);
  return S(d(rng));
}

long long coefficient_range(const Rational*) { return 1LL << 20; }
long long coefficient_range(const Zp*) { return static_cast<long long>(Zp::modulus()) - 1; }

}  // namespace

template <class S>
Rep<S>::Rep(Quiver q, Side side, std::vector<int> dims, std::vector<Matrix<S>> maps)
    : quiver_(std::move(q)), side_(side), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (static_cast<int>(dims_.size()) != quiver_.vertex_count())
    throw std::invalid_argument("dimension vector has " + std::to_string(dims_.size()) + " entries, quiver has " +
                                std::to_string(quiver_.vertex_count()) + " vertices");
  if (static_cast<int>(maps_.size()) != quiver_.arrow_count())
    throw std::invalid_argument("expected one matrix per arrow");
  offsets_.resize(dims_.size());
  for (std::size_t v = 0; v < dims_.size(); ++v) {
    if (dims_[v] < 0) throw std::invalid_argument("negative dimension");
    offsets_[v] = total_;
    total_ += dims_[v];
  }
  for (ArrowId a = 0; a < quiver_.arrow_count(); ++a) {
    const Matrix<S>& m = maps_[static_cast<std::size_t>(a)];
    if (m.rows() != dim(head(a)) || m.cols() != dim(tail(a)))
      throw std::invalid_argument("matrix for arrow '" + quiver_.arrow(a).label + "' must be " +
                                  std::to_string(dim(head(a))) + "x" + std::to_string(dim(tail(a))));
  }
  // radical series: level k+1 is the span of all arrow images of level k
  std::vector<Matrix<S>> level(dims_.size());
  int current = total_;
  for (std::size_t v = 0; v < dims_.size(); ++v) level[v] = Matrix<S>::Identity(dims_[v], dims_[v]);
  nil_bound_ = 0;
  while (current > 0) {
    std::vector<Matrix<S>> next(dims_.size());
    for (std::size_t v = 0; v < dims_.size(); ++v) next[v] = zeros<S>(dims_[v], 0);
    for (ArrowId a = 0; a < quiver_.arrow_count(); ++a) {
      const auto h = static_cast<std::size_t>(head(a));
      Matrix<S> img = maps_[static_cast<std::size_t>(a)] * level[static_cast<std::size_t>(tail(a))];
      Matrix<S> joined(dims_[h], next[h].cols() + img.cols());
      joined.leftCols(next[h].cols()) = next[h];
      joined.rightCols(img.cols()) = img;
      next[h] = image_basis<S>(joined);
    }
    int dim_next = 0;
    for (const auto& b : next) dim_next += static_cast<int>(b.cols());
    if (dim_next == current)
      throw NotNilpotent("some cycle acts invertibly (radical series stalls at dimension " +
                         std::to_string(current) + "); not a nilpotent representation");
    level = std::move(next);
    current = dim_next;
    ++nil_bound_;
  }
}

template <class S>
Rep<S> Rep<S>::zero(const Quiver& q, Side side) {
  std::vector<Matrix<S>> maps(static_cast<std::size_t>(q.arrow_count()), zeros<S>(0, 0));
  return Rep(q, side, std::vector<int>(static_cast<std::size_t>(q.vertex_count()), 0), std::move(maps));
}

template <class S>
Vertex Rep<S>::tail(ArrowId a) const {
  return side_ == Side::Left ? quiver_.arrow(a).source : quiver_.arrow(a).target;
}

template <class S>
Vertex Rep<S>::head(ArrowId a) const {
  return side_ == Side::Left ? quiver_.arrow(a).target : quiver_.arrow(a).source;
}

template <class S>
Matrix<S> Rep<S>::path_action(const Path& p) const {
  Matrix<S> m = Matrix<S>::Identity(dim(tail(p)), dim(tail(p)));
  if (side_ == Side::Left) {
    for (ArrowId a : p.arrows) m = (maps_[static_cast<std::size_t>(a)] * m).eval();
  } else {
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) m = (maps_[static_cast<std::size_t>(*it)] * m).eval();
  }
  return m;
}

template <class S>
Rep<S> Rep<S>::as_left() const {
  if (side_ == Side::Left) return *this;
  return Rep(opposite(quiver_), Side::Left, dims_, maps_);
}

template <class S>
bool is_morphism(const Rep<S>& m, const Rep<S>& n, const Morphism<S>& f) {
  if (static_cast<int>(f.size()) != m.quiver().vertex_count()) return false;
  for (Vertex v = 0; v < m.quiver().vertex_count(); ++v)
    if (f[static_cast<std::size_t>(v)].rows() != n.dim(v) || f[static_cast<std::size_t>(v)].cols() != m.dim(v))
      return false;
  for (ArrowId a = 0; a < m.quiver().arrow_count(); ++a)
    if (n.map(a) * f[static_cast<std::size_t>(m.tail(a))] != f[static_cast<std::size_t>(m.head(a))] * m.map(a))
      return false;
  return true;
}

template <class S>
Rep<S> simple(const Quiver& q, Vertex i, Side side) {
  if (i < 0 || i >= q.vertex_count()) throw std::out_of_range("vertex out of range");
  std::vector<int> dims(static_cast<std::size_t>(q.vertex_count()), 0);
  dims[static_cast<std::size_t>(i)] = 1;
  std::vector<Matrix<S>> maps;
  for (const Arrow& a : q.arrows()) {
    const Vertex tail = side == Side::Left ? a.source : a.target;
    const Vertex head = side == Side::Left ? a.target : a.source;
    maps.push_back(zeros<S>(dims[static_cast<std::size_t>(head)], dims[static_cast<std::size_t>(tail)]));
  }
  return Rep<S>(q, side, std::move(dims), std::move(maps));
}

template <class S>
Rep<S> truncated_injective(const Quiver& q, Vertex i, int max_length, Side side) {
  if (side == Side::Right) return as_right_over(q, truncated_injective<S>(opposite(q), i, max_length, Side::Left));
  const PathBasis basis(q, max_length);
  std::vector<PathBasis::Id> ids;
  std::vector<Vertex> where;
  for (int len = 0; len <= max_length; ++len)
    for (PathBasis::Id id : basis.into(i, len)) {
      ids.push_back(id);
      where.push_back(basis.path(id).source);
    }
  std::map<PathBasis::Id, int> position;
  for (std::size_t k = 0; k < ids.size(); ++k) position[ids[k]] = static_cast<int>(k);
  return left_rep_from_basis<S>(q, where, [&](ArrowId a, int k) {
    const Path& p = basis.path(ids[static_cast<std::size_t>(k)]);
    if (p.arrows.empty() || p.arrows.front() != a) return -1;
    return position.at(basis.split(ids[static_cast<std::size_t>(k)], 1).first);
  });
}

template <class S>
Rep<S> truncated_projective(const Quiver& q, Vertex i, int max_length, Side side) {
  if (side == Side::Right) return as_right_over(q, truncated_projective<S>(opposite(q), i, max_length, Side::Left));
  const PathBasis basis(q, max_length);
  std::vector<PathBasis::Id> ids;
  std::vector<Vertex> where;
  for (int len = 0; len <= max_length; ++len)
    for (PathBasis::Id id : basis.from(i, len)) {
      ids.push_back(id);
      where.push_back(basis.path(id).target);
    }
  std::map<PathBasis::Id, int> position;
  for (std::size_t k = 0; k < ids.size(); ++k) position[ids[k]] = static_cast<int>(k);
  return left_rep_from_basis<S>(q, where, [&](ArrowId a, int k) {
    const PathBasis::Id next = basis.extend_after(ids[static_cast<std::size_t>(k)], a);
    return next == PathBasis::none ? -1 : position.at(next);
  });
}

template <class S>
Matrix<S> hom_system(const Rep<S>& m, const Rep<S>& n) {
  if (m.side() != n.side()) throw std::invalid_argument("hom between Reps on different sides");
  if (!(m.quiver() == n.quiver())) throw std::invalid_argument("hom between Reps over different quivers");
  const Quiver& q = m.quiver();
  std::vector<int> var_offset(static_cast<std::size_t>(q.vertex_count()) + 1, 0);
  for (Vertex v = 0; v < q.vertex_count(); ++v)
    var_offset[static_cast<std::size_t>(v) + 1] = var_offset[static_cast<std::size_t>(v)] + m.dim(v) * n.dim(v);
  int rows = 0;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) rows += n.dim(m.head(a)) * m.dim(m.tail(a));
  Matrix<S> sys = zeros<S>(rows, var_offset.back());
  // f_v(r, c) lives at var_offset[v] + r + c * dim_N(v)
  auto var = [&](Vertex v, int r, int c) { return var_offset[static_cast<std::size_t>(v)] + r + c * n.dim(v); };
  int row = 0;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Vertex u = m.tail(a), w = m.head(a);
    const Matrix<S>& na = n.map(a);
    const Matrix<S>& ma = m.map(a);
    // (N_a f_u - f_w M_a)(r, c) = 0
    for (int c = 0; c < m.dim(u); ++c)
      for (int r = 0; r < n.dim(w); ++r, ++row) {
        for (int k = 0; k < n.dim(u); ++k)
          if (na(r, k) != S(0)) sys(row, var(u, k, c)) += na(r, k);
        for (int k = 0; k < m.dim(w); ++k)
          if (ma(k, c) != S(0)) sys(row, var(w, r, k)) -= ma(k, c);
      }
  }
  return sys;
}

template <class S>
std::vector<Morphism<S>> hom_space(const Rep<S>& m, const Rep<S>& n) {
  const Matrix<S> ker = kernel_basis<S>(hom_system(m, n));
  const Quiver& q = m.quiver();
  std::vector<Morphism<S>> out;
  for (Index k = 0; k < ker.cols(); ++k) {
    Morphism<S> f;
    int at = 0;
    for (Vertex v = 0; v < q.vertex_count(); ++v) {
      Matrix<S> block(n.dim(v), m.dim(v));
      for (int c = 0; c < m.dim(v); ++c)
        for (int r = 0; r < n.dim(v); ++r) block(r, c) = ker(at++, k);
      f.push_back(std::move(block));
    }
    out.push_back(std::move(f));
  }
  return out;
}

template <class S>
int hom_dimension(const Rep<S>& m, const Rep<S>& n) {
  const Matrix<S> sys = hom_system(m, n);
  return static_cast<int>(sys.cols() - rank<S>(sys));
}

template <class S>
Rep<S> linear_dual(const Rep<S>& m) {
  std::vector<Matrix<S>> maps;
  for (const Matrix<S>& a : m.maps()) maps.push_back(a.transpose());
  return Rep<S>(m.quiver(), flip(m.side()), m.dims(), std::move(maps));
}

template <class S>
VertexTwist<S> VertexTwist<S>::identity(const Quiver& q) {
  VertexTwist t;
  t.vertex_map.resize(static_cast<std::size_t>(q.vertex_count()));
  std::iota(t.vertex_map.begin(), t.vertex_map.end(), 0);
  t.arrow_map.resize(static_cast<std::size_t>(q.arrow_count()));
  std::iota(t.arrow_map.begin(), t.arrow_map.end(), 0);
  t.scalars.assign(static_cast<std::size_t>(q.arrow_count()), S(1));
  return t;
}

template <class S>
void VertexTwist<S>::validate(const Quiver& q) const {
  const auto nv = static_cast<std::size_t>(q.vertex_count());
  const auto na = static_cast<std::size_t>(q.arrow_count());
  if (vertex_map.size() != nv || arrow_map.size() != na || scalars.size() != na)
    throw std::invalid_argument("twist data does not match the quiver size");
  std::vector<char> hit_v(nv, 0), hit_a(na, 0);
  for (Vertex v : vertex_map) {
    if (v < 0 || static_cast<std::size_t>(v) >= nv || hit_v[static_cast<std::size_t>(v)])
      throw std::invalid_argument("twist vertex map is not a permutation");
    hit_v[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t a = 0; a < na; ++a) {
    const ArrowId b = arrow_map[a];
    if (b < 0 || static_cast<std::size_t>(b) >= na || hit_a[static_cast<std::size_t>(b)])
      throw std::invalid_argument("twist arrow map is not a permutation");
    hit_a[static_cast<std::size_t>(b)] = 1;
    const Arrow& src = q.arrow(static_cast<ArrowId>(a));
    const Arrow& img = q.arrow(b);
    if (img.source != vertex_map[static_cast<std::size_t>(src.source)] ||
        img.target != vertex_map[static_cast<std::size_t>(src.target)])
      throw std::invalid_argument("twist sends arrow '" + src.label + "' to an arrow with the wrong endpoints");
    if (scalars[a] == S(0)) throw std::invalid_argument("twist scalar must be nonzero");
  }
}

template <class S>
VertexTwist<S> VertexTwist<S>::inverse() const {
  VertexTwist t;
  t.vertex_map.resize(vertex_map.size());
  t.arrow_map.resize(arrow_map.size());
  t.scalars.resize(scalars.size());
  for (std::size_t v = 0; v < vertex_map.size(); ++v) t.vertex_map[static_cast<std::size_t>(vertex_map[v])] = static_cast<Vertex>(v);
  for (std::size_t a = 0; a < arrow_map.size(); ++a) t.arrow_map[static_cast<std::size_t>(arrow_map[a])] = static_cast<ArrowId>(a);
  for (std::size_t a = 0; a < scalars.size(); ++a)
    t.scalars[a] = S(1) / scalars[static_cast<std::size_t>(t.arrow_map[a])];
  return t;
}

template <class S>
VertexTwist<S> VertexTwist<S>::after(const VertexTwist& other) const {
  VertexTwist t;
  for (Vertex v : other.vertex_map) t.vertex_map.push_back(vertex_map[static_cast<std::size_t>(v)]);
  for (std::size_t a = 0; a < other.arrow_map.size(); ++a) {
    const auto via = static_cast<std::size_t>(other.arrow_map[a]);
    t.arrow_map.push_back(arrow_map[via]);
    t.scalars.push_back(other.scalars[a] * scalars[via]);
  }
  return t;
}

template <class S>
bool VertexTwist<S>::is_identity_on_vertices() const {
  for (std::size_t v = 0; v < vertex_map.size(); ++v)
    if (vertex_map[v] != static_cast<Vertex>(v)) return false;
  return true;
}

template <class S>
int VertexTwist<S>::vertex_order() const {
  int order = 1;
  std::vector<char> seen(vertex_map.size(), 0);
  for (std::size_t v = 0; v < vertex_map.size(); ++v) {
    if (seen[v]) continue;
    int len = 0;
    for (std::size_t w = v; !seen[w]; w = static_cast<std::size_t>(vertex_map[w])) {
      seen[w] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

template <class S>
Rep<S> twist(const Rep<S>& m, const VertexTwist<S>& t) {
  const Quiver& q = m.quiver();
  t.validate(q);
  std::vector<int> dims;
  for (Vertex v = 0; v < q.vertex_count(); ++v) dims.push_back(m.dim(t.vertex_map[static_cast<std::size_t>(v)]));
  std::vector<Matrix<S>> maps;
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    maps.push_back(t.scalars[static_cast<std::size_t>(a)] * m.map(t.arrow_map[static_cast<std::size_t>(a)]));
  return Rep<S>(q, m.side(), std::move(dims), std::move(maps));
}

template <class S>
Rep<S> direct_sum(const Rep<S>& a, const Rep<S>& b) {
  if (a.side() != b.side() || !(a.quiver() == b.quiver())) throw std::invalid_argument("direct sum of incompatible Reps");
  const Quiver& q = a.quiver();
  std::vector<int> dims;
  for (Vertex v = 0; v < q.vertex_count(); ++v) dims.push_back(a.dim(v) + b.dim(v));
  std::vector<Matrix<S>> maps;
  for (ArrowId k = 0; k < q.arrow_count(); ++k) {
    const Matrix<S>& x = a.map(k);
    const Matrix<S>& y = b.map(k);
    Matrix<S> m = zeros<S>(static_cast<int>(x.rows() + y.rows()), static_cast<int>(x.cols() + y.cols()));
    m.topLeftCorner(x.rows(), x.cols()) = x;
    m.bottomRightCorner(y.rows(), y.cols()) = y;
    maps.push_back(std::move(m));
  }
  return Rep<S>(q, a.side(), std::move(dims), std::move(maps));
}

template <class S>
Rep<S> subrep(const Rep<S>& m, const std::vector<Matrix<S>>& basis) {
  const Quiver& q = m.quiver();
  std::vector<int> dims;
  for (const auto& b : basis) dims.push_back(static_cast<int>(b.cols()));
  std::vector<Matrix<S>> maps;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Matrix<S>& bt = basis[static_cast<std::size_t>(m.tail(a))];
    const Matrix<S>& bh = basis[static_cast<std::size_t>(m.head(a))];
    const Matrix<S> img = m.map(a) * bt;
    Matrix<S> induced(bh.cols(), bt.cols());
    for (Index c = 0; c < img.cols(); ++c) {
      auto x = solve<S>(bh, img.col(c));
      if (!x) throw std::invalid_argument("subspace is not stable under arrow '" + q.arrow(a).label + "'");
      induced.col(c) = *x;
    }
    maps.push_back(std::move(induced));
  }
  return Rep<S>(q, m.side(), std::move(dims), std::move(maps));
}

template <class S>
Rep<S> quotient(const Rep<S>& m, const std::vector<Matrix<S>>& span) {
  const Quiver& q = m.quiver();
  std::vector<Cokernel<S>> co;
  std::vector<int> dims;
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    co.push_back(cokernel_data<S>(span[static_cast<std::size_t>(v)]));
    dims.push_back(static_cast<int>(co.back().dimension));
  }
  std::vector<Matrix<S>> maps;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& ct = co[static_cast<std::size_t>(m.tail(a))];
    const auto& ch = co[static_cast<std::size_t>(m.head(a))];
    if (!is_zero<S>(ch.projection * m.map(a) * span[static_cast<std::size_t>(m.tail(a))]))
      throw std::invalid_argument("quotient by a subspace that is not stable under arrow '" + q.arrow(a).label + "'");
    maps.push_back(ch.projection * m.map(a) * ct.section);
  }
  return Rep<S>(q, m.side(), std::move(dims), std::move(maps));
}

template <class S>
bool is_isomorphic(const Rep<S>& m, const Rep<S>& n, std::uint64_t seed) {
  if (m.side() != n.side() || !(m.quiver() == n.quiver()) || m.dims() != n.dims()) return false;
  if (m.total_dim() == 0) return true;
  const auto basis = hom_space(m, n);
  if (basis.empty()) return false;
  std::mt19937_64 rng(seed);
  const long long range = coefficient_range(static_cast<const S*>(nullptr));
  // small prime fields make single trials unreliable
  const int trials = range >= (1LL << 16) ? 8 : 64;
  for (int t = 0; t < trials; ++t) {
    bool invertible = true;
    std::vector<S> coeff;
    for (std::size_t k = 0; k < basis.size(); ++k) coeff.push_back(random_scalar<S>(rng, -range, range));
    for (Vertex v = 0; v < m.quiver().vertex_count() && invertible; ++v) {
      Matrix<S> f = zeros<S>(n.dim(v), m.dim(v));
      for (std::size_t k = 0; k < basis.size(); ++k) f += coeff[k] * basis[k][static_cast<std::size_t>(v)];
      invertible = is_invertible<S>(f);
    }
    if (invertible) return true;
  }
  return false;
}

template <class S>
Rep<S> random_nilpotent_rep(const Quiver& q, const std::vector<int>& dims, std::mt19937_64& rng, Side side,
                            int density_percent) {
  const Quiver act_q = side == Side::Left ? q : opposite(q);
  std::vector<std::vector<int>> level(dims.size());
  int top = 1;
  for (int d : dims) top = std::max(top, d + 1);
  std::uniform_int_distribution<int> lvl(0, top - 1), pct(0, 99);
  for (std::size_t v = 0; v < dims.size(); ++v)
    for (int k = 0; k < dims[v]; ++k) level[v].push_back(lvl(rng));
  // unit triangular change of basis per fiber
  std::vector<Matrix<S>> change, change_inv;
  for (int d : dims) {
    Matrix<S> lower = Matrix<S>::Identity(d, d), upper = Matrix<S>::Identity(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < i; ++j) {
        lower(i, j) = random_scalar<S>(rng, -2, 2);
        upper(j, i) = random_scalar<S>(rng, -2, 2);
      }
    change.push_back(lower * upper);
    change_inv.push_back(inverse<S>(change.back()));
  }
  std::vector<Matrix<S>> maps;
  for (ArrowId a = 0; a < act_q.arrow_count(); ++a) {
    const auto s = static_cast<std::size_t>(act_q.arrow(a).source);
    const auto t = static_cast<std::size_t>(act_q.arrow(a).target);
    Matrix<S> m = zeros<S>(dims[t], dims[s]);
    for (int r = 0; r < dims[t]; ++r)
      for (int c = 0; c < dims[s]; ++c)
        if (level[t][static_cast<std::size_t>(r)] > level[s][static_cast<std::size_t>(c)] && pct(rng) < density_percent)
          m(r, c) = random_scalar<S>(rng, -3, 3);
    maps.push_back(change[t] * m * change_inv[s]);
  }
  return Rep<S>(q, side, dims, std::move(maps));
}

template <class S>
Rep<S> parse_rep(const Quiver& q, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  Side side = Side::Left;
  std::optional<std::vector<int>> dims;
  std::vector<std::optional<Matrix<S>>> maps(static_cast<std::size_t>(q.arrow_count()));
  std::optional<ArrowId> filling;
  int row = 0;
  auto tail_of = [&](ArrowId a) { return side == Side::Left ? q.arrow(a).source : q.arrow(a).target; };
  auto head_of = [&](ArrowId a) { return side == Side::Left ? q.arrow(a).target : q.arrow(a).source; };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (filling) {
      const ArrowId a = *filling;
      Matrix<S>& m = *maps[static_cast<std::size_t>(a)];
      std::vector<std::string> tokens{head};
      for (std::string tok; ls >> tok;) tokens.push_back(tok);
      if (static_cast<Index>(tokens.size()) != m.cols())
        throw ParseError(lineno, "row of map '" + q.arrow(a).label + "' needs " + std::to_string(m.cols()) + " entries");
      for (std::size_t c = 0; c < tokens.size(); ++c) {
        try {
          m(row, static_cast<Index>(c)) = parse_scalar<S>(tokens[c]);
        } catch (const std::exception& e) {
          throw ParseError(lineno, e.what());
        }
      }
      if (++row == m.rows()) filling.reset();
      continue;
    }
    if (head == "side:" || head == "side") {
      std::string s;
      ls >> s;
      if (s == "left") side = Side::Left;
      else if (s == "right") side = Side::Right;
      else throw ParseError(lineno, "side must be 'left' or 'right'");
    } else if (head == "dims:" || head == "dims") {
      std::vector<int> d;
      for (long v; ls >> v;) {
        if (v < 0) throw ParseError(lineno, "negative dimension");
        d.push_back(static_cast<int>(v));
      }
      if (!ls.eof()) throw ParseError(lineno, "malformed dimension list");
      if (static_cast<int>(d.size()) != q.vertex_count())
        throw ParseError(lineno, "expected " + std::to_string(q.vertex_count()) + " dimensions");
      dims = d;
    } else if (head == "map") {
      if (!dims) throw ParseError(lineno, "'dims:' must come before any map");
      std::string label;
      if (!(ls >> label)) throw ParseError(lineno, "expected 'map <label>'");
      const auto a = q.find_arrow(label);
      if (!a) throw ParseError(lineno, "unknown arrow '" + label + "'");
      if (maps[static_cast<std::size_t>(*a)]) throw ParseError(lineno, "map '" + label + "' given twice");
      const int r = (*dims)[static_cast<std::size_t>(head_of(*a))];
      const int c = (*dims)[static_cast<std::size_t>(tail_of(*a))];
      maps[static_cast<std::size_t>(*a)] = zeros<S>(r, c);
      row = 0;
      if (r > 0 && c > 0) filling = *a;
    } else {
      throw ParseError(lineno, "unrecognised directive '" + head + "'");
    }
  }
  if (filling) throw ParseError(lineno, "map '" + q.arrow(*filling).label + "' is missing rows");
  if (!dims) throw ParseError(lineno, "missing 'dims:' line");
  std::vector<Matrix<S>> out;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    auto& m = maps[static_cast<std::size_t>(a)];
    out.push_back(m ? *m
                    : zeros<S>((*dims)[static_cast<std::size_t>(head_of(a))], (*dims)[static_cast<std::size_t>(tail_of(a))]));
  }
  try {
    return Rep<S>(q, side, *dims, std::move(out));
  } catch (const NotNilpotent& e) {
    throw ParseError(lineno, e.what());
  }
}

template <class S>
std::string format_rep(const Rep<S>& m) {
  std::ostringstream out;
  out << "side: " << to_string(m.side()) << "\ndims:";
  for (int d : m.dims()) out << ' ' << d;
  out << '\n';
  for (ArrowId a = 0; a < m.quiver().arrow_count(); ++a) {
    out << "map " << m.quiver().arrow(a).label << '\n';
    const Matrix<S>& x = m.map(a);
    if (x.cols() == 0) continue;
    for (Index r = 0; r < x.rows(); ++r) {
      for (Index c = 0; c < x.cols(); ++c) out << (c ? " " : "") << scalar_to_string<S>(x(r, c));
      out << '\n';
    }
  }
  return out.str();
}

#define PATHCO_INSTANTIATE(S)                                                                                  \
  template class Rep<S>;                                                                                       \
  template struct VertexTwist<S>;                                                                              \
  template bool is_morphism<S>(const Rep<S>&, const Rep<S>&, const Morphism<S>&);                             \
  template Rep<S> simple<S>(const Quiver&, Vertex, Side);                                                      \
  template Rep<S> truncated_injective<S>(const Quiver&, Vertex, int, Side);                                    \
  template Rep<S> truncated_projective<S>(const Quiver&, Vertex, int, Side);                                   \
  template Matrix<S> hom_system<S>(const Rep<S>&, const Rep<S>&);                                              \
  template std::vector<Morphism<S>> hom_space<S>(const Rep<S>&, const Rep<S>&);                                \
  template int hom_dimension<S>(const Rep<S>&, const Rep<S>&);                                                 \
  template Rep<S> linear_dual<S>(const Rep<S>&);                                                               \
  template Rep<S> twist<S>(const Rep<S>&, const VertexTwist<S>&);                                              \
  template Rep<S> direct_sum<S>(const Rep<S>&, const Rep<S>&);                                                 \
  template Rep<S> subrep<S>(const Rep<S>&, const std::vector<Matrix<S>>&);                                     \
  template Rep<S> quotient<S>(const Rep<S>&, const std::vector<Matrix<S>>&);                                   \
  template bool is_isomorphic<S>(const Rep<S>&, const Rep<S>&, std::uint64_t);                                 \
  template Rep<S> random_nilpotent_rep<S>(const Quiver&, const std::vector<int>&, std::mt19937_64&, Side, int); \
  template Rep<S> parse_rep<S>(const Quiver&, const std::string&);                                             \
  template std::string format_rep<S>(const Rep<S>&);

PATHCO_INSTANTIATE(Rational)
PATHCO_INSTANTIATE(Zp)

}  // namespace pathco
