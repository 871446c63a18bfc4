#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

#include "ipp/geometry.hpp"

namespace ipp {

struct DynamicLimits {
  double v_ref = 3.0;  // m/s
  double a_ref = 1.5;  // m/s^2
};

// Fixed start/end derivatives (orders 1..4). Defaults to rest.
struct BoundaryState {
  Vec3 velocity{};
  Vec3 acceleration{};
  Vec3 jerk{};
  Vec3 snap{};
};

// Polynomial coefficients are stored in scaled time tau = (t - t0) / T,
// 12 per axis (order-11 polynomial).
struct PolySegment {
  std::array<std::array<double, 12>, 3> coeffs;  // [axis][power]
  double duration = 0.0;
};

struct TrajectorySample {
  Vec3 position;
  Vec3 velocity;
  Vec3 acceleration;
};

// Physical derivative values (orders 0..5) per axis at one waypoint.
using WaypointDerivatives = std::array<std::array<double, 6>, 3>;

class Trajectory {
 public:
  Trajectory(std::vector<Vec3> waypoints, std::vector<double> durations,
             std::vector<WaypointDerivatives> derivatives);

  double duration() const { return total_; }
  const std::vector<PolySegment>& segments() const { return segments_; }
  const std::vector<Vec3>& waypoints() const { return waypoints_; }
  const std::vector<double>& waypoint_times() const { return waypoint_times_; }
  const std::vector<WaypointDerivatives>& derivatives() const { return derivatives_; }

  // Throws std::out_of_range for t outside [0, duration].
  TrajectorySample sample(double t) const;

  // Integral of squared snap over the whole trajectory.
  double snap_cost() const;

  // CSV rows (t, x, y, z, vx, vy, vz) at fixed sampling.
  void write_csv(std::ostream& os, double dt) const;

 private:
  std::vector<Vec3> waypoints_;
  std::vector<double> waypoint_times_;
  std::vector<WaypointDerivatives> derivatives_;
  std::vector<PolySegment> segments_;
  double total_ = 0.0;
};

// Smooth minimum-snap polynomial through the viewpoints. Waypoint positions
// are interpolated exactly; free interior derivatives minimize the snap
// integral; segment durations come from a trapezoidal ramp at the reference
// limits and are uniformly rescaled until the sampled speed/acceleration
// stay within 1.05x of the references.
// Throws std::invalid_argument for fewer than 2 viewpoints or duplicate
// consecutive viewpoints, std::runtime_error on QP failure.
Trajectory plan_through(std::span<const Vec3> viewpoints, const DynamicLimits& limits,
                        const BoundaryState* start = nullptr,
                        const BoundaryState* end = nullptr);

// Total duration of plan_through over the same chain.
double travel_time(std::span<const Vec3> viewpoints, const DynamicLimits& limits);

// Passage times of the given viewpoints along the trajectory, greedily
// dropping any that arrives sooner than min_interval after the last kept
// one. The viewpoints must be an in-order subsequence of the trajectory's
// waypoints.
std::vector<double> measurement_times(const Trajectory& traj, std::span<const Vec3> viewpoints,
                                      double min_interval);

// Rebuild a trajectory from explicit waypoint derivatives (test hook for
// optimality checks and the endpoint-derivative parameterization).
Trajectory trajectory_from_derivatives(std::vector<Vec3> waypoints,
                                       std::vector<double> durations,
                                       std::vector<WaypointDerivatives> derivatives);

}  // namespace ipp
