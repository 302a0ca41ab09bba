#include "pdrb/diagram.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace pdrb {

DiagramPoint project_to_diagonal(DiagramPoint p) noexcept {
  const double mid = 0.5 * (p.birth + p.death);
  return {mid, mid};
}

double distance_to_diagonal(DiagramPoint p) noexcept {
  return std::abs(p.death - p.birth) / std::numbers::sqrt2;
}

PersistenceDiagram::PersistenceDiagram(std::vector<DiagramPoint> points,
                                       std::optional<std::string> label)
    : points_(std::move(points)), label_(std::move(label)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (!std::isfinite(p.birth) || !std::isfinite(p.death)) {
      std::ostringstream os;
      os << "diagram point " << i << " has a non-finite coordinate";
      throw std::invalid_argument(os.str());
    }
    if (p.birth > p.death) {
      std::ostringstream os;
      os << "diagram point " << i << " (" << p.birth << ", " << p.death
         << ") lies below the diagonal";
      throw std::invalid_argument(os.str());
    }
  }
}

AugmentedPair augment(std::span<const DiagramPoint> x, std::span<const DiagramPoint> y) {
  AugmentedPair pair;
  pair.left_off_diagonal = x.size();
  pair.right_off_diagonal = y.size();
  pair.left.reserve(x.size() + y.size());
  pair.right.reserve(x.size() + y.size());
  for (const auto& p : x) pair.left.push_back({p, PointKind::OffDiagonal});
  for (const auto& p : y) pair.left.push_back({project_to_diagonal(p), PointKind::Diagonal});
  for (const auto& p : y) pair.right.push_back({p, PointKind::OffDiagonal});
  for (const auto& p : x) pair.right.push_back({project_to_diagonal(p), PointKind::Diagonal});
  return pair;
}

AugmentedPair augment(const PersistenceDiagram& x, const PersistenceDiagram& y) {
  return augment(x.points(), y.points());
}

PersistenceDiagram prune(const PersistenceDiagram& x, double epsilon) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("prune: epsilon must be >= 0");
  std::vector<DiagramPoint> kept;
  kept.reserve(x.size());
  for (const auto& p : x.points())
    if (p.persistence() > epsilon) kept.push_back(p);
  return PersistenceDiagram(std::move(kept), x.label());
}

}  // namespace pdrb
