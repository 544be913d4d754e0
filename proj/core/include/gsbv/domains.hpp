#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsbv/vec2.hpp"

namespace gsbv {

// {t : x + t*h in U}. Open interval; endpoints may be +-infinity.
struct SectionInterval {
  double t_lower = 0.0;
  double t_upper = 0.0;
  bool nonempty = false;
};

// Open convex planar region. Membership is strict everywhere: the boundary
// has measure zero and never belongs to the domain.
class PlanarDomain {
 public:
  enum class Kind { Rhomb, Disc, Halfplane, Polygon };

  // Open rhomb with vertices (m^2, 0), (0, m), (-m^2, 0), (0, -m). m >= 2:
  // at m = 1 the vertex disc of radius m^{-2} collides with the opposite
  // vertex geometry.
  static PlanarDomain rhomb(int m);
  static PlanarDomain disc(Vec2 center, double radius);
  static PlanarDomain halfplane(Vec2 normal, double offset);  // {x : n.x > c}
  static PlanarDomain polygon(std::vector<Vec2> vertices);    // convex, CCW

  bool contains(Vec2 p) const;
  // Exact endpoints of {t : x + t*h in domain} by half-plane / quadratic
  // clipping. Throws std::invalid_argument on a zero direction.
  SectionInterval section(Vec2 x, Vec2 h) const;
  // Euclidean distance from p to the boundary (valid inside and outside).
  double boundary_distance(Vec2 p) const;

  bool bounded() const;
  struct BoundingBox {
    double xmin, xmax, ymin, ymax;
  };
  BoundingBox bounding_box() const;  // throws for unbounded kinds

  Kind kind() const { return kind_; }
  int rhomb_m() const;
  Vec2 disc_center() const { return center_; }
  double disc_radius() const { return radius_; }
  Vec2 halfplane_normal() const { return normal_; }
  double halfplane_offset() const { return offset_; }
  const std::vector<Vec2>& vertices() const { return verts_; }

  std::string describe() const;

  // JSON round-trip of the kind + parameters, used by CLI configs.
  std::string to_json() const;
  static PlanarDomain from_json(const std::string& text);

 private:
  PlanarDomain() = default;
  void build_edges();

  Kind kind_ = Kind::Polygon;
  std::vector<Vec2> verts_;  // rhomb + polygon, CCW
  int m_ = 0;                // rhomb only
  Vec2 center_{};
  double radius_ = 0.0;
  Vec2 normal_{};  // unit inward normal for halfplane
  double offset_ = 0.0;
  struct Edge {
    Vec2 inward_normal;  // unit
    double offset;       // interior is {x : n.x > offset}
  };
  std::vector<Edge> edges_;
};

// Product of rhombs K_m for m = m_min..M, optionally intersected with the
// ball {sum_m m^{-2} |x_m|^2 <= bound} of the weighted sequence space L.
// Block i of an input span corresponds to m = m_min + i.
class ProductDomain {
 public:
  explicit ProductDomain(int truncation,
                         std::optional<double> l_norm_bound = std::nullopt,
                         int m_min = 2);

  int truncation() const { return truncation_; }
  int m_min() const { return m_min_; }
  int block_count() const { return truncation_ - m_min_ + 1; }
  const PlanarDomain& factor(int m) const;
  std::optional<double> l_norm_bound() const { return l_bound_; }

  double l_norm_squared(std::span<const Vec2> blocks) const;
  bool contains(std::span<const Vec2> blocks) const;

  // Sufficient H-openness certificate: every perturbation in the truncated
  // l2-ball of the given radius stays inside iff dist(x_m, bd K_m) >= radius
  // for every block. Throws std::invalid_argument when x is not in the
  // domain.
  bool h_open_witness(std::span<const Vec2> blocks, double radius) const;

 private:
  int m_min_;
  int truncation_;
  std::optional<double> l_bound_;
  std::vector<PlanarDomain> factors_;
};

// Truncated membership in the ellipsoid {sum_n n^{-2} x_n^2 < 1}.
bool ellipsoid_contains(std::span<const double> x, int truncation);

// Finite-N statistic N^{-1} sum_{n<=N} x_n^2. The set where this tends to 1
// is a full-measure set; at finite truncation only the statistic is exposed,
// never a membership predicate.
double z_mean_square(std::span<const double> x, int truncation);

}  // namespace gsbv
