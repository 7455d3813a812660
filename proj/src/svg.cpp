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

#include "mmnav/svg.hpp"

#include <cstdio>
#include <string_view>

namespace mmnav {

namespace {

constexpr double kScale = 50.0;  // px per meter
constexpr double kMargin = 20.0;

class Canvas {
 public:
  explicit Canvas(const Environment& env) : b_(env.bounds()) {
    const double w = (b_.max().x - b_.min().x) * kScale + 2 * kMargin;
    const double h = (b_.max().y - b_.min().y) * kScale + 2 * kMargin;
    out_ = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" +
           num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
    rect(b_.min().x, b_.min().y, b_.max().x, b_.max().y, "#ffffff", "#000000");
    for (const Obstacle& o : env.obstacles()) {
      rect(o.box.min().x, o.box.min().y, o.box.max().x, o.box.max().y, "#888888", "#444444");
    }
  }

  void line(const Vec3& a, const Vec3& b, std::string_view color, double width,
            double opacity = 1.0) {
    out_ += "<line x1=\"" + num(px(a.x)) + "\" y1=\"" + num(py(a.y)) + "\" x2=\"" +
            num(px(b.x)) + "\" y2=\"" + num(py(b.y)) + "\" stroke=\"" + std::string(color) +
            "\" stroke-width=\"" + num(width) + "\" stroke-opacity=\"" + num(opacity) + "\"/>\n";
  }

  void dot(const Vec3& p, std::string_view color, double r) {
    out_ += "<circle cx=\"" + num(px(p.x)) + "\" cy=\"" + num(py(p.y)) + "\" r=\"" + num(r) +
            "\" fill=\"" + std::string(color) + "\"/>\n";
  }

  std::string finish() { return out_ + "</svg>\n"; }

 private:
  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
  }
  double px(double x) const { return kMargin + (x - b_.min().x) * kScale; }
  // SVG y grows downward.
  double py(double y) const { return kMargin + (b_.max().y - y) * kScale; }

  void rect(double x0, double y0, double x1, double y1, std::string_view fill,
            std::string_view stroke) {
    out_ += "<rect x=\"" + num(px(x0)) + "\" y=\"" + num(py(y1)) + "\" width=\"" +
            num((x1 - x0) * kScale) + "\" height=\"" + num((y1 - y0) * kScale) + "\" fill=\"" +
            std::string(fill) + "\" stroke=\"" + std::string(stroke) + "\"/>\n";
  }

  const Aabb& b_;
  std::string out_;
};

std::string_view edge_color(EdgeKind k) {
  switch (k) {
    case EdgeKind::Ground: return "#2ca02c";
    case EdgeKind::Flight: return "#1f77b4";
    case EdgeKind::Transition: return "#ff7f0e";
  }
  return "#000000";
}

std::string_view mode_color(RobotMode m) {
  switch (m) {
    case RobotMode::UGV: return "#2ca02c";
    case RobotMode::UAS: return "#1f77b4";
    case RobotMode::Morphing: return "#ff7f0e";
  }
  return "#000000";
}

}  // namespace

std::string plan_svg(const Environment& env, const Roadmap& roadmap,
                     const std::vector<PlannedLeg>& legs, bool draw_roadmap) {
  Canvas c(env);
  if (draw_roadmap) {
    for (const RoadmapEdge& e : roadmap.edges()) {
      c.line(roadmap.node(e.a).position, roadmap.node(e.b).position, "#cccccc", 0.5, 0.6);
    }
    for (const RoadmapNode& n : roadmap.nodes()) {
      c.dot(n.position, n.mode == NodeMode::Ground ? "#9ad09a" : "#9ac0e0", 1.2);
    }
  }
  for (const PlannedLeg& leg : legs) {
    const Roadmap& rm = leg.query.roadmap;
    const PlanResult& plan = leg.plan;
    for (std::size_t i = 0; i < plan.edge_indices.size(); ++i) {
      const RoadmapEdge& e = rm.edges()[plan.edge_indices[i]];
      c.line(rm.node(plan.node_ids[i]).position, rm.node(plan.node_ids[i + 1]).position,
             edge_color(e.kind), 3.0);
    }
    if (!plan.node_ids.empty()) {
      c.dot(rm.node(plan.node_ids.front()).position, "#000000", 4.0);
      c.dot(rm.node(plan.node_ids.back()).position, "#d62728", 4.0);
    }
  }
  return c.finish();
}

std::string trajectory_svg(const Environment& env, const std::vector<TrajectoryRecord>& log,
                           const std::vector<Vec3>& waypoints) {
  Canvas c(env);
  for (std::size_t i = 1; i < log.size(); ++i) {
    c.line(log[i - 1].state.position(), log[i].state.position(), mode_color(log[i].state.mode),
           2.5);
  }
  if (!log.empty()) c.dot(log.front().state.position(), "#000000", 4.0);
  for (const Vec3& w : waypoints) c.dot(w, "#d62728", 4.0);
  return c.finish();
}

}  // namespace mmnav
