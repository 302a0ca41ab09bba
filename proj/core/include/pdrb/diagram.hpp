#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pdrb {

/// A point in the birth/death plane.
struct DiagramPoint {
  double birth = 0.0;
  double death = 0.0;

  [[nodiscard]] double persistence() const noexcept { return death - birth; }
  friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
};

/// Orthogonal projection onto the diagonal, ((b+d)/2, (b+d)/2).
[[nodiscard]] DiagramPoint project_to_diagonal(DiagramPoint p) noexcept;

/// Euclidean distance from p to the diagonal, (d-b)/sqrt(2) for points above it.
[[nodiscard]] double distance_to_diagonal(DiagramPoint p) noexcept;

/// Finite multiset of birth/death pairs. The diagonal itself is implicit and
/// never stored. Points keep the order they were inserted in.
///
/// Every point must be finite with birth <= death. Zero-persistence points are
/// accepted (extraction of a constant field produces one) and behave exactly
/// like the diagonal under every distance; prune() removes them.
class PersistenceDiagram {
 public:
  PersistenceDiagram() = default;
  explicit PersistenceDiagram(std::vector<DiagramPoint> points,
                              std::optional<std::string> label = std::nullopt);

  [[nodiscard]] std::span<const DiagramPoint> points() const noexcept { return points_; }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] bool empty() const noexcept { return points_.empty(); }
  [[nodiscard]] const DiagramPoint& operator[](std::size_t i) const { return points_[i]; }

  [[nodiscard]] const std::optional<std::string>& label() const noexcept { return label_; }
  void set_label(std::optional<std::string> label) { label_ = std::move(label); }

  friend bool operator==(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<DiagramPoint> points_;
  std::optional<std::string> label_;
};

enum class PointKind { OffDiagonal, Diagonal };

struct AugmentedPoint {
  DiagramPoint point;
  PointKind kind = PointKind::OffDiagonal;

  [[nodiscard]] bool on_diagonal() const noexcept { return kind == PointKind::Diagonal; }
};

/// Two diagrams padded with each other's diagonal projections:
/// left = X followed by proj(Y), right = Y followed by proj(X).
struct AugmentedPair {
  std::vector<AugmentedPoint> left;
  std::vector<AugmentedPoint> right;
  std::size_t left_off_diagonal = 0;   // |X|
  std::size_t right_off_diagonal = 0;  // |Y|

  [[nodiscard]] std::size_t size() const noexcept { return left.size(); }
};

[[nodiscard]] AugmentedPair augment(std::span<const DiagramPoint> x, std::span<const DiagramPoint> y);
[[nodiscard]] AugmentedPair augment(const PersistenceDiagram& x, const PersistenceDiagram& y);

/// Keeps points with persistence strictly greater than epsilon, in order.
/// Throws std::invalid_argument for a negative or NaN epsilon.
[[nodiscard]] PersistenceDiagram prune(const PersistenceDiagram& x, double epsilon);

}  // namespace pdrb
