#ifndef SCHEDCP_SCENARIO_HPP_
#define SCHEDCP_SCENARIO_HPP_

#include <cstdint>
#include <vector>

#include "schedcp/grid.hpp"
#include "schedcp/rng.hpp"

namespace schedcp::scenario {

struct ScenarioConfig {
  int grid_h = 64;
  int grid_w = 64;
  double cell_size_m = 1.0;
  int n_collaborators = 4;  // one of them is flagged RSU
  int n_objects_min = 10;
  int n_objects_max = 18;
  double obj_len_min_m = 2.0;
  double obj_len_max_m = 6.0;
  double obj_wid_min_m = 1.5;
  double obj_wid_max_m = 3.0;
  double speed_min_mps = 0.0;
  double speed_max_mps = 25.0 / 3.6;
  double sensor_range_m = 40.0;
  bool force_occlusion = true;
  // Confidence-map surrogate parameters.
  double base_hit = 0.9;
  double base_miss = 0.05;
  double prior_invisible = 0.05;
  double conf_noise_sigma = 0.03;
  double false_pos_prob = 0.01;
  double false_pos_lo = 0.5;
  double false_pos_hi = 0.9;

  void validate() const;  // throws std::invalid_argument
};

struct UnitState {
  double x_m = 0.0;
  double y_m = 0.0;
  double speed_mps = 0.0;
  double heading_rad = 0.0;
  bool is_rsu = false;
  double sensor_range_m = 40.0;
};

// Axis-aligned opaque footprint with a translation velocity.
struct ObjectFootprint {
  double cx_m = 0.0;
  double cy_m = 0.0;
  double half_len_m = 1.0;  // x extent
  double half_wid_m = 1.0;  // y extent
  double vx_mps = 0.0;
  double vy_mps = 0.0;

  double min_x() const { return cx_m - half_len_m; }
  double max_x() const { return cx_m + half_len_m; }
  double min_y() const { return cy_m - half_wid_m; }
  double max_y() const { return cy_m + half_wid_m; }
  bool contains(double px, double py) const {
    return px > min_x() && px < max_x() && py > min_y() && py < max_y();
  }
};

struct ScenarioWorld {
  int grid_h = 0;
  int grid_w = 0;
  double cell_size_m = 1.0;
  std::vector<UnitState> units;  // [0] = ego, 1..N = collaborators
  std::vector<ObjectFootprint> objects;
  BinaryMap gt_map;  // 1 iff some object covers the cell center
  ScenarioConfig cfg;

  double cell_center_x(int col) const { return (col + 0.5) * cell_size_m; }
  double cell_center_y(int row) const { return (row + 0.5) * cell_size_m; }
  double extent_x() const { return grid_w * cell_size_m; }
  double extent_y() const { return grid_h * cell_size_m; }
  int n_collaborators() const { return static_cast<int>(units.size()) - 1; }
};

// Deterministic synthetic intersection world. With cfg.force_occlusion an
// occluder is inserted, if needed, so that at least one object cell is
// invisible to the ego.
ScenarioWorld generate_scenario(const ScenarioConfig& cfg, std::uint64_t seed);

// Cell is visible iff within sensor range and the segment from the unit to the
// cell center crosses no opaque footprint; a cell inside an object counts as
// visible once its near face is reached.
BinaryMap visibility_map(const UnitState& unit, const ScenarioWorld& world);

// Surrogate for the learned confidence generator: geometry plus noise.
ConfidenceMap initial_confidence(const UnitState& unit, const ScenarioWorld& world,
                                 Rng& rng);

// Advance units and objects by one interval; reflect at the grid bounds.
// The RSU never moves. gt_map is rebuilt.
void step_mobility(ScenarioWorld& world, double interval_s);

void rebuild_gt_map(ScenarioWorld& world);

}  // namespace schedcp::scenario

#endif  // SCHEDCP_SCENARIO_HPP_
