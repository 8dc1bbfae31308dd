#include "hdk/render.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "hdk/error.hpp"
#include "hdk/kernel.hpp"

namespace hdk {
namespace {

std::string region_label(const Diagram& d, const Signature& sig) {
  return d.dim() == 0 ? sig.name(d.generator()) : std::string();
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

Scene project(const Diagram& d, const Signature& sig) {
  if (d.dim() == 0) throw Error(ErrorCode::DimensionMismatch, "a 0-diagram has no projection");
  const auto& sl = slices(d, sig);
  Scene scene;
  const std::size_t n = d.entries().size();
  scene.height = static_cast<double>(std::max<std::size_t>(n, 1));

  if (d.dim() == 1) {
    scene.width = 1;
    for (std::size_t i = 0; i < n; ++i)
      scene.vertices.push_back(Vertex{sig.name(d[i].generator), Point{0, i + 0.5}});
    scene.regions.push_back(Region{region_label(d.source(), sig), -0.5, 0.5});
    return scene;
  }

  std::size_t widest = 1;
  for (const Diagram& y : sl) widest = std::max(widest, y.entries().size());
  scene.width = static_cast<double>(widest);

  // open[j]: index into scene.wires of the wire at position j of the current slice
  std::vector<std::size_t> open;
  for (std::size_t j = 0; j < sl[0].entries().size(); ++j) {
    scene.wires.push_back(Wire{sig.name(sl[0][j].generator), {Point{double(j), 0}}});
    open.push_back(j);
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Entry& e = d[i];
    const std::size_t h = e.embedding[0];
    const std::size_t s = sig.source(e.generator).size();
    const std::size_t t = sig.target(e.generator).size();
    double vx = h - 0.5;
    if (s > 0) vx = h + (s - 1) / 2.0;
    else if (t > 0) vx = h + (t - 1) / 2.0;
    const Point vertex{vx, i + 0.5};
    scene.vertices.push_back(Vertex{sig.name(e.generator), vertex});

    std::vector<std::size_t> next;
    for (std::size_t j = 0; j < h; ++j) next.push_back(open[j]);
    for (std::size_t j = h; j < h + s; ++j) scene.wires[open[j]].points.push_back(vertex);
    for (std::size_t k = 0; k < t; ++k) {
      next.push_back(scene.wires.size());
      scene.wires.push_back(Wire{sig.name(sl[i + 1][h + k].generator), {vertex}});
    }
    for (std::size_t j = h + s; j < open.size(); ++j) next.push_back(open[j]);
    for (std::size_t j = 0; j < next.size(); ++j)
      scene.wires[next[j]].points.push_back(Point{double(j), double(i + 1)});
    open = std::move(next);
  }
  if (n == 0)
    for (std::size_t j = 0; j < open.size(); ++j) scene.wires[open[j]].points.push_back(Point{double(j), 1});

  const Diagram& bottom = sl[0];
  const std::size_t m = bottom.entries().size();
  const auto& regions = slices(bottom, sig);
  for (std::size_t j = 0; j <= m; ++j) {
    const double left = j == 0 ? -0.5 : double(j) - 1;
    const double right = j == m ? scene.width - 0.5 : double(j);
    scene.regions.push_back(Region{region_label(regions[j], sig), left, right});
  }
  return scene;
}

std::string scene_to_svg(const Scene& scene) {
  constexpr double unit = 60;
  constexpr double margin = 30;
  auto px = [&](double x) { return margin + (x + 0.5) * unit; };
  auto py = [&](double y) { return margin + (scene.height - y) * unit; };
  const double w = 2 * margin + scene.width * unit;
  const double h = 2 * margin + scene.height * unit;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(w) + "\" height=\"" +
         num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
  for (const Region& r : scene.regions) {
    out += "  <rect x=\"" + num(px(r.left)) + "\" y=\"" + num(py(scene.height)) + "\" width=\"" +
           num((r.right - r.left) * unit) + "\" height=\"" + num(scene.height * unit) +
           "\" fill=\"#eef0f6\" stroke=\"none\"/>\n";
    if (!r.label.empty())
      out += "  <text x=\"" + num(px((r.left + r.right) / 2)) + "\" y=\"" + num(py(0) - 6) +
             "\" font-size=\"11\" fill=\"#667\" text-anchor=\"middle\">" + escape(r.label) + "</text>\n";
  }
  for (const Wire& wire : scene.wires) {
    std::string d;
    for (std::size_t k = 0; k < wire.points.size(); ++k)
      d += (k ? " L " : "M ") + num(px(wire.points[k].x)) + " " + num(py(wire.points[k].y));
    out += "  <path d=\"" + d + "\" fill=\"none\" stroke=\"#222\" stroke-width=\"2\"><title>" +
           escape(wire.label) + "</title></path>\n";
  }
  for (const Vertex& v : scene.vertices) {
    out += "  <circle cx=\"" + num(px(v.at.x)) + "\" cy=\"" + num(py(v.at.y)) + "\" r=\"7\" fill=\"#222\"/>\n";
    out += "  <text x=\"" + num(px(v.at.x) + 10) + "\" y=\"" + num(py(v.at.y) + 4) +
           "\" font-size=\"13\" fill=\"#222\">" + escape(v.label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string scene_to_json(const Scene& scene) {
  using ojson = nlohmann::ordered_json;
  auto point = [](const Point& p) { return ojson::array({p.x, p.y}); };
  ojson out;
  out["width"] = scene.width;
  out["height"] = scene.height;
  ojson wires = ojson::array();
  for (const Wire& w : scene.wires) {
    ojson pts = ojson::array();
    for (const Point& p : w.points) pts.push_back(point(p));
    wires.push_back(ojson{{"label", w.label}, {"points", pts}});
  }
  out["wires"] = std::move(wires);
  ojson vertices = ojson::array();
  for (const Vertex& v : scene.vertices)
    vertices.push_back(ojson{{"label", v.label}, {"x", v.at.x}, {"y", v.at.y}});
  out["vertices"] = std::move(vertices);
  ojson regions = ojson::array();
  for (const Region& r : scene.regions)
    regions.push_back(ojson{{"label", r.label}, {"left", r.left}, {"right", r.right}});
  out["regions"] = std::move(regions);
  return out.dump();
}

}  // namespace hdk
