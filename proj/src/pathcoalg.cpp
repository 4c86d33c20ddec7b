#include "pathco/pathcoalg.hpp"

namespace pathco {

std::vector<std::pair<PathBasis::Id, PathBasis::Id>> PathCoalgebra::comultiply(PathBasis::Id p) const {
  std::vector<std::pair<PathBasis::Id, PathBasis::Id>> out;
  const int len = basis_.length(p);
  out.reserve(static_cast<std::size_t>(len) + 1);
  for (int k = 0; k <= len; ++k) out.push_back(basis_.split(p, k));
  return out;
}

std::vector<Path> radical_power_basis(const Quiver& q, int m, int max_length) {
  if (m < 0 || m > max_length + 1)
    throw std::invalid_argument("radical power " + std::to_string(m) + " exceeds truncation " +
                                std::to_string(max_length) + " + 1");
  PathBasis basis(q, max_length);
  std::vector<Path> out;
  for (int len = m; len <= max_length; ++len)
    for (PathBasis::Id id : basis.of_length(len)) out.push_back(basis.path(id));
  return out;
}

std::vector<Eigen::MatrixXi> bigraded_dims(const Quiver& q, int up_to) {
  const Eigen::MatrixXi adj = q.adjacency();
  std::vector<Eigen::MatrixXi> out{Eigen::MatrixXi::Identity(q.vertex_count(), q.vertex_count())};
  for (int l = 1; l <= up_to; ++l) out.push_back(adj * out.back());
  return out;
}

}  // namespace pathco
