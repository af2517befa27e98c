#include "linear.hpp"

#include <algorithm>

namespace rigiditykit::detail {

std::optional<RatMatrix> invert(RatMatrix m) {
  const std::size_t n = m.size();
  RatMatrix inv(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rat scale = m[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rat factor = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= factor * m[col][j];
        inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

std::optional<AffineMap> as_affine(const std::map<VarName, MPoly>& images) {
  AffineMap map;
  std::set<VarName> targets;
  for (const auto& [src, image] : images) {
    map.sources.push_back(src);
    if (image.total_degree() > 1) return std::nullopt;
    for (const auto& v : image.vars()) targets.insert(v);
  }
  map.targets.assign(targets.begin(), targets.end());
  for (const auto& [src, image] : images) {
    std::vector<Rat> row(map.targets.size());
    for (std::size_t j = 0; j < map.targets.size(); ++j) row[j] = image.coeff(Monomial::variable(map.targets[j]));
    map.linear.push_back(std::move(row));
    map.offset.push_back(image.coeff(Monomial()));
  }
  return map;
}

}  // namespace rigiditykit::detail
