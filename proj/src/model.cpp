#include "uavcover/model.hpp"

#include <algorithm>
#include <limits>

namespace uavcover {

void CoverageModel::validate() const {
  if (!(alpha > 0.0)) throw InputError("model.alpha: must be > 0");
  if (!(beta > 0.0 && beta < 1.0)) throw InputError("model.beta: must be in (0, 1)");
  if (!(h_star > 0.0)) throw InputError("model.h_star: must be > 0");
  if (!(w > 0.0 && w < 1.0)) throw InputError("model.w: must be in (0, 1)");
  if (!(c > 0.0)) throw InputError("model.c: must be > 0");
}

void Scenario::validate() const {
  model.validate();
  if (!(length >= 0.0)) throw InputError("length: must be >= 0");
  if (length <= 0.0 && !nfzs.empty())
    throw InputError("nfzs: no-fly zones require a positive target length");
  if (uavs.empty()) throw InputError("uavs: at least one UAV required");
  for (std::size_t i = 0; i < uavs.size(); ++i) {
    if (!(uavs[i].battery > 0.0))
      throw InputError("uavs[" + std::to_string(i) + "].battery: must be > 0");
  }
  for (std::size_t k = 0; k < nfzs.size(); ++k) {
    const auto& z = nfzs[k];
    const std::string tag = "nfzs[" + std::to_string(k) + "]";
    if (!(z.left < z.right)) throw InputError(tag + ": left must be < right");
    if (z.right <= 0.0 || z.left >= length)
      throw InputError(tag + ": must overlap the target interval [0, L]");
    if (k > 0 && nfzs[k - 1].right > z.left)
      throw InputError(tag + ": overlaps previous no-fly zone");
  }
}

double radius(const CoverageModel& m, double h) {
  if (h < 0.0) throw DomainError("radius: altitude must be >= 0");
  if (h > m.h_star * (1.0 + 1e-12) + 1e-15)
    throw DomainError("radius: altitude above turning point h*");
  if (h == 0.0) return 0.0;
  return m.alpha * std::pow(std::min(h, m.h_star), m.beta);
}

double inverse_radius(const CoverageModel& m, double r) {
  if (r < 0.0) throw DomainError("inverse_radius: radius must be >= 0");
  const double rmax = m.max_radius();
  // Small relative slack so radii that round-tripped through printing stay
  // in-domain; the altitude is clamped back to h_star.
  if (r > rmax * (1.0 + 1e-7))
    throw UncoverableError("inverse_radius: radius " + std::to_string(r) +
                           " uncoverable, r(h*) = " + std::to_string(rmax));
  if (r == 0.0) return 0.0;
  return std::min(std::pow(r / m.alpha, 1.0 / m.beta), m.h_star);
}

double travel_distance(const CoverageModel& m, double from_x, double from_y,
                       double to_x, double to_y, double h) {
  if (h < 0.0) throw DomainError("travel_distance: altitude must be >= 0");
  const double dx = to_x - from_x;
  const double dy = to_y - from_y;
  return m.w * std::hypot(dx, dy) + h;
}

double leftover(const CoverageModel& m, double battery, double distance) {
  if (distance < 0.0) throw DomainError("leftover: distance must be >= 0");
  return battery - m.c * distance;
}

Placement make_placement(const CoverageModel& m, const UavSpec& uav, double x,
                         double y, double h) {
  Placement p;
  p.uav_id = uav.id;
  p.x_final = x;
  p.y_final = y;
  p.altitude = h;
  p.radius = radius(m, h);
  p.distance = travel_distance(m, uav.x, uav.y, x, y, h);
  p.leftover = leftover(m, uav.battery, p.distance);
  p.deployed = true;
  return p;
}

Placement grounded_placement(const UavSpec& uav) {
  Placement p;
  p.uav_id = uav.id;
  p.x_final = uav.x;
  p.y_final = uav.y;
  p.altitude = 0.0;
  p.radius = 0.0;
  p.distance = 0.0;
  p.leftover = uav.battery;
  p.deployed = false;
  return p;
}

double bottleneck_leftover(const std::vector<Placement>& placements) {
  double b = std::numeric_limits<double>::infinity();
  for (const auto& p : placements) b = std::min(b, p.leftover);
  return b;
}

}  // namespace uavcover
