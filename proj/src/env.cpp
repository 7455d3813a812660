// Copyright 2026 The mmnav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mmnav/env.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mmnav/errors.hpp"

namespace mmnav {

namespace {

constexpr double kBelowGroundTol = 1e-9;

bool lex_less(const Vec3& a, const Vec3& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

}  // namespace

Aabb::Aabb(const Vec3& min, const Vec3& max) : min_(min), max_(max) {
  if (!(min.x < max.x && min.y < max.y && min.z < max.z)) {
    throw ConfigError("Aabb requires min < max on every axis");
  }
}

bool Aabb::contains(const Vec3& p) const {
  return p.x >= min_.x && p.x <= max_.x && p.y >= min_.y && p.y <= max_.y && p.z >= min_.z &&
         p.z <= max_.z;
}

double Aabb::distance(const Vec3& p) const {
  const double dx = std::max({min_.x - p.x, 0.0, p.x - max_.x});
  const double dy = std::max({min_.y - p.y, 0.0, p.y - max_.y});
  const double dz = std::max({min_.z - p.z, 0.0, p.z - max_.z});
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

bool Aabb::intersects(const Aabb& o) const {
  return min_.x <= o.max_.x && o.min_.x <= max_.x && min_.y <= o.max_.y &&
         o.min_.y <= max_.y && min_.z <= o.max_.z && o.min_.z <= max_.z;
}

double Heightmap::interpolate(double x, double y) const {
  const double fx = std::clamp((x - origin.x) / resolution, 0.0, static_cast<double>(cols - 1));
  const double fy = std::clamp((y - origin.y) / resolution, 0.0, static_cast<double>(rows - 1));
  const int c0 = static_cast<int>(std::floor(fx));
  const int r0 = static_cast<int>(std::floor(fy));
  const int c1 = std::min(c0 + 1, cols - 1);
  const int r1 = std::min(r0 + 1, rows - 1);
  const double tx = fx - c0;
  const double ty = fy - r0;
  const double bottom = at(r0, c0) * (1.0 - tx) + at(r0, c1) * tx;
  const double top = at(r1, c0) * (1.0 - tx) + at(r1, c1) * tx;
  return bottom * (1.0 - ty) + top * ty;
}

Environment::Environment(Aabb bounds, GroundModel ground, std::vector<Obstacle> obstacles)
    : bounds_(bounds), ground_(std::move(ground)), obstacles_(std::move(obstacles)) {
  for (const auto& ob : obstacles_) {
    if (!ob.box.intersects(bounds_)) {
      throw ConfigError("obstacle '" + ob.name + "' lies entirely outside bounds");
    }
  }
  const double lo = bounds_.min().z;
  const double hi = bounds_.max().z;
  if (const auto* c = std::get_if<ConstantGround>(&ground_)) {
    if (c->z < lo || c->z > hi) throw ConfigError("ground elevation outside vertical bounds");
  } else {
    const auto& hm = std::get<Heightmap>(ground_);
    if (hm.rows < 1 || hm.cols < 1 || !(hm.resolution > 0.0) ||
        hm.data.size() != static_cast<std::size_t>(hm.rows) * static_cast<std::size_t>(hm.cols)) {
      throw ConfigError("heightmap needs rows, cols >= 1, resolution > 0 and rows*cols samples");
    }
    // Bilinear values are convex combinations of samples, so checking samples suffices.
    for (double z : hm.data) {
      if (z < lo || z > hi) throw ConfigError("heightmap sample outside vertical bounds");
    }
  }
}

bool Environment::in_footprint(double x, double y) const {
  return x >= bounds_.min().x && x <= bounds_.max().x && y >= bounds_.min().y &&
         y <= bounds_.max().y;
}

double Environment::ground_height(double x, double y) const {
  if (!in_footprint(x, y)) throw DomainError("ground_height query outside bounds footprint");
  if (const auto* c = std::get_if<ConstantGround>(&ground_)) return c->z;
  return std::get<Heightmap>(ground_).interpolate(x, y);
}

bool Environment::point_in_collision(const Vec3& p, double clearance) const {
  if (clearance < 0.0) throw DomainError("clearance must be >= 0");
  const Vec3& lo = bounds_.min();
  const Vec3& hi = bounds_.max();
  if (p.x - clearance < lo.x || p.x + clearance > hi.x || p.y - clearance < lo.y ||
      p.y + clearance > hi.y || p.z < lo.z || p.z > hi.z) {
    return true;
  }
  if (p.z < ground_height(p.x, p.y) - kBelowGroundTol) return true;
  return std::any_of(obstacles_.begin(), obstacles_.end(),
                     [&](const Obstacle& ob) { return ob.box.distance(p) <= clearance; });
}

double segment_box_distance(const Vec3& a, const Vec3& b, const Aabb& box) {
  const Vec3 d = b - a;
  const double pa[3] = {a.x, a.y, a.z};
  const double pd[3] = {d.x, d.y, d.z};
  const double lo[3] = {box.min().x, box.min().y, box.min().z};
  const double hi[3] = {box.max().x, box.max().y, box.max().z};

  // The squared distance is a single quadratic between slab crossings.
  std::vector<double> ts = {0.0, 1.0};
  for (int i = 0; i < 3; ++i) {
    if (pd[i] == 0.0) continue;
    for (double bound : {lo[i], hi[i]}) {
      const double t = (bound - pa[i]) / pd[i];
      if (t > 0.0 && t < 1.0) ts.push_back(t);
    }
  }
  std::sort(ts.begin(), ts.end());

  double best = std::numeric_limits<double>::infinity();
  auto eval = [&](double t) { best = std::min(best, box.distance(a + d * t)); };
  for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
    const double t0 = ts[k];
    const double t1 = ts[k + 1];
    const double tm = 0.5 * (t0 + t1);
    double qa = 0.0;
    double qb = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double c = pa[i] + tm * pd[i];
      const double bound = c < lo[i] ? lo[i] : (c > hi[i] ? hi[i] : c);
      if (bound == c) continue;
      qa += pd[i] * pd[i];
      qb += 2.0 * pd[i] * (pa[i] - bound);
    }
    eval(t0);
    if (qa > 0.0) eval(std::clamp(-qb / (2.0 * qa), t0, t1));
  }
  eval(1.0);
  return best;
}

bool Environment::segment_in_collision(const Vec3& a, const Vec3& b, double clearance) const {
  if (point_in_collision(a, clearance) || point_in_collision(b, clearance)) return true;
  // Exact against boxes; this also covers every point the sampled test visits.
  const bool swap = lex_less(b, a);
  const Vec3& from = swap ? b : a;
  const Vec3& to = swap ? a : b;
  for (const Obstacle& ob : obstacles_) {
    if (segment_box_distance(from, to, ob.box) <= clearance) return true;
  }
  // Valid centers form a box over flat ground, so endpoints decide bounds and
  // ground. Heightmaps are sampled.
  if (flat_ground()) return false;
  for (const Vec3& p : sample_segment(a, b, segment_sample_step(clearance))) {
    if (point_in_collision(p, clearance)) return true;
  }
  return false;
}

double segment_sample_step(double clearance) {
  if (clearance < 0.0) throw DomainError("clearance must be >= 0");
  return clearance > 0.0 ? std::min(0.05, clearance / 2.0) : 0.05;
}

std::vector<Vec3> sample_segment(const Vec3& a, const Vec3& b, double step) {
  const bool swap = lex_less(b, a);
  const Vec3& from = swap ? b : a;
  const Vec3& to = swap ? a : b;
  const Vec3 d = to - from;
  const double len = d.norm();
  if (len == 0.0) return {from};
  const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(len / step)));
  std::vector<Vec3> pts;
  pts.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    pts.push_back(i == n ? to : from + d * (static_cast<double>(i) / static_cast<double>(n)));
  }
  return pts;
}

// ---------------------------------------------------------------------------

OccupancyGrid::OccupancyGrid(double resolution, Vec2 origin, int width, int height)
    : resolution_(resolution), origin_(origin), width_(width), height_(height) {
  if (!(resolution > 0.0)) throw ConfigError("grid resolution must be > 0");
  if (width < 1 || height < 1) throw ConfigError("grid must have at least one cell");
  cells_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), Cell::Free);
}

GridIndex OccupancyGrid::world_to_cell(double x, double y) const {
  return {static_cast<int>(std::floor((y - origin_.y) / resolution_)),
          static_cast<int>(std::floor((x - origin_.x) / resolution_))};
}

Vec2 OccupancyGrid::cell_center(GridIndex c) const {
  return {origin_.x + (c.col + 0.5) * resolution_, origin_.y + (c.row + 0.5) * resolution_};
}

std::size_t OccupancyGrid::occupied_count() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), Cell::Occupied));
}

namespace {

OccupancyGrid make_projection_grid(const Environment& env, const GridProjection& proj) {
  if (!(proj.resolution > 0.0)) throw ConfigError("grid resolution must be > 0");
  if (proj.inflation < 0.0) throw ConfigError("inflation must be >= 0");
  if (!(proj.band.low < proj.band.high)) throw ConfigError("height band requires low < high");
  const double ex = env.bounds().max().x - env.bounds().min().x;
  const double ey = env.bounds().max().y - env.bounds().min().y;
  if (proj.resolution > ex || proj.resolution > ey) {
    throw ConfigError("grid resolution larger than bounds extent");
  }
  const int w = static_cast<int>(std::ceil(ex / proj.resolution - 1e-9));
  const int h = static_cast<int>(std::ceil(ey / proj.resolution - 1e-9));
  return OccupancyGrid(proj.resolution, {env.bounds().min().x, env.bounds().min().y}, w, h);
}

// Per-cell kernel shared by the serial and parallel drivers.
Cell classify_cell(const Environment& env, const GridProjection& proj, const OccupancyGrid& grid,
                   GridIndex c) {
  const double res = grid.resolution();
  const double x0 = grid.origin().x + c.col * res;
  const double y0 = grid.origin().y + c.row * res;
  const double x1 = x0 + res;
  const double y1 = y0 + res;
  const Vec3& blo = env.bounds().min();
  const Vec3& bhi = env.bounds().max();
  const double cx = std::clamp(0.5 * (x0 + x1), blo.x, bhi.x);
  const double cy = std::clamp(0.5 * (y0 + y1), blo.y, bhi.y);
  const double ground = env.ground_height(cx, cy);
  const double band_lo = ground + proj.band.low;
  const double band_hi = ground + proj.band.high;
  const double infl2 = proj.inflation * proj.inflation;

  for (const auto& ob : env.obstacles()) {
    const Vec3& lo = ob.box.min();
    const Vec3& hi = ob.box.max();
    if (!(lo.z < band_hi && hi.z > band_lo)) continue;
    // Signed gaps between the cell and box rectangles; negative means overlap.
    const double gx = std::max(lo.x - x1, x0 - hi.x);
    const double gy = std::max(lo.y - y1, y0 - hi.y);
    if (gx < 0.0 && gy < 0.0) return Cell::Occupied;
    if (proj.inflation > 0.0) {
      const double dx = std::max(gx, 0.0);
      const double dy = std::max(gy, 0.0);
      if (dx * dx + dy * dy <= infl2) return Cell::Occupied;
    }
  }
  return Cell::Free;
}

}  // namespace

OccupancyGrid project_to_grid_serial(const Environment& env, const GridProjection& proj) {
  OccupancyGrid grid = make_projection_grid(env, proj);
  for (int r = 0; r < grid.height(); ++r) {
    for (int c = 0; c < grid.width(); ++c) {
      grid.set({r, c}, classify_cell(env, proj, grid, {r, c}));
    }
  }
  return grid;
}

OccupancyGrid project_to_grid(const Environment& env, const GridProjection& proj) {
  OccupancyGrid grid = make_projection_grid(env, proj);
  const int h = grid.height();
  const int w = grid.width();
  auto& cells = grid.mutable_cells();
#pragma omp parallel for schedule(static)
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      cells[grid.index({r, c})] = classify_cell(env, proj, grid, {r, c});
    }
  }
  return grid;
}

}  // namespace mmnav
