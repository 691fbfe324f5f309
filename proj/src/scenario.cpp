#include "schedcp/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schedcp::scenario {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;
constexpr double kBlockEps = 1e-9;

// Entry/exit parameters of segment a->b through an axis-aligned rectangle,
// clipped to [0, 1]. Returns false when the segment misses the rectangle.
bool segment_rect_interval(double ax, double ay, double bx, double by,
                           const ObjectFootprint& o, double* t_in, double* t_out) {
  const double dx = bx - ax;
  const double dy = by - ay;
  double t0 = 0.0, t1 = 1.0;
  const double slabs[2][3] = {{dx, ax, 0}, {dy, ay, 0}};
  const double lo[2] = {o.min_x(), o.min_y()};
  const double hi[2] = {o.max_x(), o.max_y()};
  for (int axis = 0; axis < 2; ++axis) {
    const double d = slabs[axis][0];
    const double s = slabs[axis][1];
    if (std::fabs(d) < 1e-300) {
      if (s <= lo[axis] || s >= hi[axis]) return false;
      continue;
    }
    double ta = (lo[axis] - s) / d;
    double tb = (hi[axis] - s) / d;
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
    if (t0 >= t1) return false;
  }
  *t_in = t0;
  *t_out = t1;
  return true;
}

bool rects_overlap(const ObjectFootprint& a, const ObjectFootprint& b, double clearance) {
  return a.min_x() < b.max_x() + clearance && a.max_x() > b.min_x() - clearance &&
         a.min_y() < b.max_y() + clearance && a.max_y() > b.min_y() - clearance;
}

bool placement_ok(const ObjectFootprint& cand, const ScenarioWorld& world,
                  double unit_clearance) {
  if (cand.min_x() < 0 || cand.max_x() > world.extent_x() || cand.min_y() < 0 ||
      cand.max_y() > world.extent_y())
    return false;
  for (const auto& o : world.objects)
    if (rects_overlap(cand, o, 0.2)) return false;
  for (const auto& u : world.units) {
    const ObjectFootprint grown{cand.cx_m, cand.cy_m, cand.half_len_m + unit_clearance,
                                cand.half_wid_m + unit_clearance, 0, 0};
    if (grown.contains(u.x_m, u.y_m)) return false;
  }
  return true;
}

bool ego_sees_all_objects(const ScenarioWorld& world) {
  const BinaryMap vis = visibility_map(world.units[0], world);
  for (int r = 0; r < world.grid_h; ++r)
    for (int c = 0; c < world.grid_w; ++c)
      if (world.gt_map(r, c) && !vis(r, c)) return false;
  return true;
}

}  // namespace

void ScenarioConfig::validate() const {
  if (grid_h < 4 || grid_w < 4) throw std::invalid_argument("scenario: grid must be at least 4x4");
  if (!(cell_size_m > 0)) throw std::invalid_argument("scenario: cell_size_m must be > 0");
  if (n_collaborators < 1) throw std::invalid_argument("scenario: n_collaborators must be >= 1");
  if (n_objects_min < 0 || n_objects_max < n_objects_min)
    throw std::invalid_argument("scenario: bad object count range");
  if (speed_min_mps < 0 || speed_max_mps < speed_min_mps)
    throw std::invalid_argument("scenario: bad speed range");
  if (speed_max_mps > 25.0 / 3.6 + 1e-9)
    throw std::invalid_argument("scenario: speeds above 25 km/h are out of range");
  if (!(sensor_range_m > 0)) throw std::invalid_argument("scenario: sensor_range_m must be > 0");
  // Capacity: worst-case object area (with clearance) must fit loosely.
  const double max_area = (obj_len_max_m + 0.4) * (obj_wid_max_m + 0.4);
  const double grid_area = grid_h * grid_w * cell_size_m * cell_size_m;
  if (n_objects_max * max_area > 0.5 * grid_area)
    throw std::invalid_argument("scenario: object count exceeds grid capacity");
}

ScenarioWorld generate_scenario(const ScenarioConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  Rng rng(substream_seed(seed, "scenario"));

  ScenarioWorld world;
  world.grid_h = cfg.grid_h;
  world.grid_w = cfg.grid_w;
  world.cell_size_m = cfg.cell_size_m;
  world.cfg = cfg;
  world.gt_map = BinaryMap(cfg.grid_h, cfg.grid_w, 0);

  const double ex = world.extent_x();
  const double ey = world.extent_y();

  UnitState ego;
  ego.x_m = 0.5 * ex + rng.uniform(-0.08, 0.08) * ex;
  ego.y_m = 0.5 * ey + rng.uniform(-0.08, 0.08) * ey;
  ego.speed_mps = rng.uniform(cfg.speed_min_mps, cfg.speed_max_mps);
  ego.heading_rad = rng.uniform(0.0, kTwoPi);
  ego.sensor_range_m = cfg.sensor_range_m;
  world.units.push_back(ego);

  // Collaborators on stratified bearings around the ego; the last one is the
  // RSU, pinned to a corner quadrant.
  for (int j = 0; j < cfg.n_collaborators; ++j) {
    UnitState u;
    u.sensor_range_m = cfg.sensor_range_m;
    const bool rsu = (j == cfg.n_collaborators - 1);
    if (rsu) {
      u.is_rsu = true;
      u.speed_mps = 0.0;
      u.heading_rad = 0.0;
      u.x_m = rng.uniform(0.08, 0.20) * ex;
      u.y_m = rng.uniform(0.08, 0.20) * ey;
    } else {
      const double angle = kTwoPi * (j + rng.uniform(0.1, 0.9)) / std::max(1, cfg.n_collaborators - 1);
      const double radius = rng.uniform(0.18, 0.42) * std::min(ex, ey);
      u.x_m = std::clamp(ego.x_m + radius * std::cos(angle), 1.5, ex - 1.5);
      u.y_m = std::clamp(ego.y_m + radius * std::sin(angle), 1.5, ey - 1.5);
      u.speed_mps = rng.uniform(cfg.speed_min_mps, cfg.speed_max_mps);
      u.heading_rad = rng.uniform(0.0, kTwoPi);
    }
    world.units.push_back(u);
  }

  const int n_objects =
      cfg.n_objects_min + (cfg.n_objects_max > cfg.n_objects_min
                               ? rng.uniform_int(cfg.n_objects_max - cfg.n_objects_min + 1)
                               : 0);
  for (int i = 0; i < n_objects; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < 300 && !placed; ++attempt) {
      ObjectFootprint o;
      o.half_len_m = 0.5 * rng.uniform(cfg.obj_len_min_m, cfg.obj_len_max_m);
      o.half_wid_m = 0.5 * rng.uniform(cfg.obj_wid_min_m, cfg.obj_wid_max_m);
      o.cx_m = rng.uniform(o.half_len_m, ex - o.half_len_m);
      o.cy_m = rng.uniform(o.half_wid_m, ey - o.half_wid_m);
      const double sp = rng.uniform(cfg.speed_min_mps, cfg.speed_max_mps);
      const double hd = rng.uniform(0.0, kTwoPi);
      o.vx_mps = sp * std::cos(hd);
      o.vy_mps = sp * std::sin(hd);
      if (placement_ok(o, world, 1.0)) {
        world.objects.push_back(o);
        placed = true;
      }
    }
    if (!placed) throw std::invalid_argument("scenario: could not place objects, grid too dense");
  }
  rebuild_gt_map(world);

  if (cfg.force_occlusion && !world.objects.empty() && ego_sees_all_objects(world)) {
    // Drop an occluder between the ego and the farthest object.
    const UnitState& e = world.units[0];
    size_t far_idx = 0;
    double far_d = -1;
    for (size_t i = 0; i < world.objects.size(); ++i) {
      const double dx = world.objects[i].cx_m - e.x_m;
      const double dy = world.objects[i].cy_m - e.y_m;
      const double d = dx * dx + dy * dy;
      if (d > far_d) {
        far_d = d;
        far_idx = i;
      }
    }
    const ObjectFootprint target = world.objects[far_idx];
    for (int attempt = 0; attempt < 100; ++attempt) {
      const double f = rng.uniform(0.35, 0.7);
      ObjectFootprint occ;
      occ.cx_m = e.x_m + f * (target.cx_m - e.x_m);
      occ.cy_m = e.y_m + f * (target.cy_m - e.y_m);
      occ.half_len_m = 2.5;
      occ.half_wid_m = 2.0;
      occ.cx_m = std::clamp(occ.cx_m, occ.half_len_m, ex - occ.half_len_m);
      occ.cy_m = std::clamp(occ.cy_m, occ.half_wid_m, ey - occ.half_wid_m);
      if (!placement_ok(occ, world, 1.0)) continue;
      world.objects.push_back(occ);
      rebuild_gt_map(world);
      if (!ego_sees_all_objects(world)) break;
      world.objects.pop_back();
      rebuild_gt_map(world);
    }
  }
  return world;
}

void rebuild_gt_map(ScenarioWorld& world) {
  world.gt_map = BinaryMap(world.grid_h, world.grid_w, 0);
  for (int r = 0; r < world.grid_h; ++r) {
    const double cy = world.cell_center_y(r);
    for (int c = 0; c < world.grid_w; ++c) {
      const double cx = world.cell_center_x(c);
      for (const auto& o : world.objects) {
        if (o.contains(cx, cy)) {
          world.gt_map(r, c) = 1;
          break;
        }
      }
    }
  }
}

BinaryMap visibility_map(const UnitState& unit, const ScenarioWorld& world) {
  BinaryMap vis(world.grid_h, world.grid_w, 0);
  const double range2 = unit.sensor_range_m * unit.sensor_range_m;
  for (int r = 0; r < world.grid_h; ++r) {
    const double cy = world.cell_center_y(r);
    for (int c = 0; c < world.grid_w; ++c) {
      const double cx = world.cell_center_x(c);
      const double dx = cx - unit.x_m;
      const double dy = cy - unit.y_m;
      if (dx * dx + dy * dy > range2) continue;
      // Near face of whatever object holds the cell center: the ray only has
      // to stay clear up to that point.
      double t_need = 1.0;
      for (const auto& o : world.objects) {
        if (!o.contains(cx, cy)) continue;
        double t0, t1;
        if (segment_rect_interval(unit.x_m, unit.y_m, cx, cy, o, &t0, &t1))
          t_need = std::min(t_need, t0);
        else
          t_need = 0.0;  // unit inside the same object
      }
      bool blocked = false;
      for (const auto& o : world.objects) {
        double t0, t1;
        if (!segment_rect_interval(unit.x_m, unit.y_m, cx, cy, o, &t0, &t1)) continue;
        if (std::min(t1, t_need) - std::max(t0, 0.0) > kBlockEps) {
          blocked = true;
          break;
        }
      }
      if (!blocked) vis(r, c) = 1;
    }
  }
  return vis;
}

ConfidenceMap initial_confidence(const UnitState& unit, const ScenarioWorld& world,
                                 Rng& rng) {
  const ScenarioConfig& cfg = world.cfg;
  const BinaryMap vis = visibility_map(unit, world);
  ConfidenceMap tau(world.grid_h, world.grid_w, 0.0);
  for (std::int64_t i = 0; i < tau.size(); ++i) {
    const bool v = vis[i] != 0;
    const bool gt = world.gt_map[i] != 0;
    double value = v ? (gt ? cfg.base_hit : cfg.base_miss) : cfg.prior_invisible;
    value += cfg.conf_noise_sigma * rng.normal();
    if (cfg.false_pos_prob > 0 && v && !gt && rng.uniform01() < cfg.false_pos_prob)
      value = rng.uniform(cfg.false_pos_lo, cfg.false_pos_hi);
    tau[i] = std::clamp(value, 0.01, 0.99);
  }
  return tau;
}

void step_mobility(ScenarioWorld& world, double interval_s) {
  if (!(interval_s > 0)) throw std::invalid_argument("step_mobility: interval_s must be > 0");
  const double ex = world.extent_x();
  const double ey = world.extent_y();

  for (auto& u : world.units) {
    if (u.is_rsu || u.speed_mps == 0.0) continue;
    double vx = u.speed_mps * std::cos(u.heading_rad);
    double vy = u.speed_mps * std::sin(u.heading_rad);
    double nx = u.x_m + vx * interval_s;
    double ny = u.y_m + vy * interval_s;
    if (nx < 0.5 || nx > ex - 0.5) {
      nx = std::clamp(nx < 0.5 ? 1.0 - nx : 2.0 * (ex - 0.5) - nx, 0.5, ex - 0.5);
      vx = -vx;
    }
    if (ny < 0.5 || ny > ey - 0.5) {
      ny = std::clamp(ny < 0.5 ? 1.0 - ny : 2.0 * (ey - 0.5) - ny, 0.5, ey - 0.5);
      vy = -vy;
    }
    u.x_m = nx;
    u.y_m = ny;
    u.heading_rad = std::atan2(vy, vx);
  }

  for (auto& o : world.objects) {
    double nx = o.cx_m + o.vx_mps * interval_s;
    double ny = o.cy_m + o.vy_mps * interval_s;
    if (nx < o.half_len_m || nx > ex - o.half_len_m) {
      nx = std::clamp(nx < o.half_len_m ? 2.0 * o.half_len_m - nx : 2.0 * (ex - o.half_len_m) - nx,
                      o.half_len_m, ex - o.half_len_m);
      o.vx_mps = -o.vx_mps;
    }
    if (ny < o.half_wid_m || ny > ey - o.half_wid_m) {
      ny = std::clamp(ny < o.half_wid_m ? 2.0 * o.half_wid_m - ny : 2.0 * (ey - o.half_wid_m) - ny,
                      o.half_wid_m, ey - o.half_wid_m);
      o.vy_mps = -o.vy_mps;
    }
    o.cx_m = nx;
    o.cy_m = ny;
  }
  rebuild_gt_map(world);
}

}  // namespace schedcp::scenario
