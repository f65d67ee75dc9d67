#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qanyon {

/// A site of a finite square lattice, addressed by (row, col).
struct LatticeSite {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const LatticeSite&, const LatticeSite&) = default;
  std::string to_string() const;
};

/// The two opposite branch-cut conventions of the lattice angle function.
enum class CutType { gamma, delta };

const char* to_string(CutType cut);

/// Finite 2D square lattice with open boundaries and a row-major total order.
///
/// Sites are indexed 0..site_count()-1 in the order they compare, so the
/// index of a site is its rank in the total order.
class Lattice {
 public:
  Lattice(std::size_t width, std::size_t height);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t site_count() const { return width_ * height_; }

  bool contains(const LatticeSite& s) const { return s.row < height_ && s.col < width_; }

  /// Rank of a site in the total order. Throws std::out_of_range for foreign sites.
  std::size_t index(const LatticeSite& s) const;
  LatticeSite site(std::size_t index) const;
  std::vector<LatticeSite> sites() const;

  /// Name of the total order, echoed into reports.
  static constexpr const char* order_name = "row-major lexicographic";

  std::string to_string() const;

 private:
  std::size_t width_;
  std::size_t height_;
};

/// sgn(x - y) under the lattice order: -1, 0 or +1.
int order_sign(const LatticeSite& x, const LatticeSite& y);

/// Lattice Kronecker delta.
int lattice_delta(const LatticeSite& x, const LatticeSite& y);

/// Lattice angle function Theta_cut(x, y) in radians, a step function of the order.
/// Theta_gamma(x, y) = +pi/2 when y < x and -pi/2 when y > x; Theta_delta = -Theta_gamma.
/// Throws std::invalid_argument when x == y.
double angle(CutType cut, const LatticeSite& x, const LatticeSite& y);

}  // namespace qanyon
