#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rigiditykit/mpoly.hpp"
#include "rigiditykit/rat.hpp"

namespace rigiditykit::detail {

using RatMatrix = std::vector<std::vector<Rat>>;

/// Gauss-Jordan inverse of a square matrix; nullopt when singular.
std::optional<RatMatrix> invert(RatMatrix m);

/// Affine map: each image is a polynomial of total degree <= 1.
struct AffineMap {
  std::vector<VarName> sources;  // keys of the map, sorted
  std::vector<VarName> targets;  // variables used by the images, sorted
  RatMatrix linear;              // linear[i][j]: coefficient of targets[j] in image of sources[i]
  std::vector<Rat> offset;
};

/// nullopt when some image has a term of degree >= 2.
std::optional<AffineMap> as_affine(const std::map<VarName, MPoly>& images);

}  // namespace rigiditykit::detail
