#pragma once

#include <string>
#include <vector>

#include "hdk/diagram.hpp"
#include "hdk/signature.hpp"

namespace hdk {

struct Point {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Wire {
  std::string label;
  std::vector<Point> points;  // bottom to top
};

struct Vertex {
  std::string label;
  Point at;
};

/// A vertical band between two adjacent wires at the bottom of the diagram.
struct Region {
  std::string label;
  double left = 0;
  double right = 0;
};

/// 2-projected picture of a diagram in diagram units: wire j of slice i sits
/// at (j, i), the vertex of entry i at height i + 0.5.
struct Scene {
  double width = 0;
  double height = 0;
  std::vector<Wire> wires;
  std::vector<Vertex> vertices;
  std::vector<Region> regions;
};

Scene project(const Diagram& d, const Signature& sig);
std::string scene_to_svg(const Scene& scene);
std::string scene_to_json(const Scene& scene);

}  // namespace hdk
