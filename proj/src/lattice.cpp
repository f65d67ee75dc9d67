#include "qanyon/lattice.hpp"

#include <numbers>
#include <stdexcept>

namespace qanyon {

std::string LatticeSite::to_string() const {
  return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

const char* to_string(CutType cut) { return cut == CutType::gamma ? "gamma" : "delta"; }

Lattice::Lattice(std::size_t width, std::size_t height) : width_(width), height_(height) {
  if (width == 0 || height == 0) {
    throw std::invalid_argument("lattice dimensions must be positive, got " +
                                std::to_string(width) + "x" + std::to_string(height));
  }
}

std::size_t Lattice::index(const LatticeSite& s) const {
  if (!contains(s)) {
    throw std::out_of_range("site " + s.to_string() + " outside " + to_string() + " lattice");
  }
  return s.row * width_ + s.col;
}

LatticeSite Lattice::site(std::size_t index) const {
  if (index >= site_count()) throw std::out_of_range("site index out of range");
  return {index / width_, index % width_};
}

std::vector<LatticeSite> Lattice::sites() const {
  std::vector<LatticeSite> out;
  out.reserve(site_count());
  for (std::size_t i = 0; i < site_count(); ++i) out.push_back(site(i));
  return out;
}

std::string Lattice::to_string() const {
  return std::to_string(width_) + "x" + std::to_string(height_);
}

int order_sign(const LatticeSite& x, const LatticeSite& y) {
  if (x.row != y.row) return x.row < y.row ? -1 : 1;
  if (x.col != y.col) return x.col < y.col ? -1 : 1;
  return 0;
}

int lattice_delta(const LatticeSite& x, const LatticeSite& y) { return x == y ? 1 : 0; }

double angle(CutType cut, const LatticeSite& x, const LatticeSite& y) {
  const int sign = order_sign(x, y);
  if (sign == 0) throw std::invalid_argument("angle undefined at coincident sites " + x.to_string());
  const double gamma = sign > 0 ? std::numbers::pi / 2 : -std::numbers::pi / 2;
  return cut == CutType::gamma ? gamma : -gamma;
}

}  // namespace qanyon
