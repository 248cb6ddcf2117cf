#include "vgit/svg.hpp"

#include <cmath>
#include <cstdio>

namespace vgit {

namespace {

constexpr double kSize = 640.0;
constexpr double kCenter = kSize / 2;
constexpr double kRadius = 270.0;

const char* kPalette[] = {"#7db8e8", "#f2b96e", "#9bd49b", "#d9a7d4",
                          "#e8a3a0", "#c4c87f", "#8fd3c9", "#c9b08f"};

struct Pt {
  double x = 0, y = 0;
};

// Unit direction of an exact vector; (0,0) maps to the origin.
Pt unit(const RatVec& v) {
  double x = v[0].get_d(), y = v[1].get_d();
  double h = std::hypot(x, y);
  if (h == 0) return {0, 0};
  return {x / h, y / h};
}

Pt canvas(Pt p, double scale = 1.0) {
  return {kCenter + kRadius * scale * p.x, kCenter - kRadius * scale * p.y};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string polygon(const std::vector<Pt>& pts, const std::string& fill) {
  std::string s = "  <polygon points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) s += " ";
    s += num(pts[i].x) + "," + num(pts[i].y);
  }
  s += "\" fill=\"" + fill + "\" fill-opacity=\"0.55\" stroke=\"none\"/>\n";
  return s;
}

std::string line(Pt a, Pt b, const std::string& stroke, double width) {
  return "  <line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" +
         num(b.x) + "\" y2=\"" + num(b.y) + "\" stroke=\"" + stroke +
         "\" stroke-width=\"" + num(width) + "\"/>\n";
}

std::string label(Pt p, const std::string& text) {
  return "  <text x=\"" + num(p.x) + "\" y=\"" + num(p.y) +
         "\" font-size=\"13\" font-family=\"monospace\" "
         "text-anchor=\"middle\">" +
         text + "</text>\n";
}

std::string coord_label(const RatVec& v) {
  return "(" + v[0].get_num().get_str() + "," + v[1].get_num().get_str() +
         ")";
}

std::string chamber_shape(const Cone& C, const std::string& fill) {
  const Pt origin = canvas({0, 0});
  if (C.lineality_dim() == 2)
    return polygon({canvas({-1, -1}), canvas({1, -1}), canvas({1, 1}),
                    canvas({-1, 1})},
                   fill);
  if (C.lineality_dim() == 1) {
    Pt b = unit(C.lineality()[0]);
    if (C.rays().empty())  // a line: draw as a band along it
      return line(canvas({-b.x, -b.y}), canvas(b), fill, 6.0);
    Pt r = unit(C.rays()[0]);
    return polygon({canvas({-b.x, -b.y}), canvas(r), canvas(b)}, fill);
  }
  if (C.rays().size() == 2) {
    Pt u1 = unit(C.rays()[0]);
    Pt u2 = unit(C.rays()[1]);
    Pt m = unit(C.relint_point());
    return polygon({origin, canvas(u1), canvas(m), canvas(u2)}, fill);
  }
  if (C.rays().size() == 1)  // a single ray of full dimension cannot occur,
    return line(origin, canvas(unit(C.rays()[0])), fill, 6.0);
  return "";  // origin chamber: the center dot suffices
}

}  // namespace

std::string render_fan_svg(const GitFan& fan,
                           const std::optional<Character>& highlight) {
  if (fan.charge.torus_rank() != 2)
    throw UnsupportedRankError(
        "render_fan_svg: only rank-2 character lattices are drawable, got "
        "rank " +
        std::to_string(fan.charge.torus_rank()));

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         num(kSize) + "\" height=\"" + num(kSize) + "\" viewBox=\"0 0 " +
         num(kSize) + " " + num(kSize) + "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (size_t i = 0; i < fan.chambers.size(); ++i)
    svg += chamber_shape(fan.chambers[i].cone,
                         kPalette[i % (sizeof kPalette / sizeof *kPalette)]);

  // Walls: rays and lines, labeled by their primitive coordinates.
  for (const GitClass& wall : fan.walls) {
    const Cone& C = wall.cone;
    if (C.lineality_dim() == 1) {
      Pt b = unit(C.lineality()[0]);
      svg += line(canvas({-b.x, -b.y}), canvas(b), "#333333", 2.0);
      svg += label(canvas(b, 1.08), coord_label(C.lineality()[0]));
    }
    for (const RatVec& r : C.rays()) {
      Pt u = unit(r);
      svg += line(canvas({0, 0}), canvas(u), "#333333", 2.0);
      svg += label(canvas(u, 1.08), coord_label(r));
    }
  }

  svg += "  <circle cx=\"" + num(kCenter) + "\" cy=\"" + num(kCenter) +
         "\" r=\"3\" fill=\"#333333\"/>\n";

  if (highlight) {
    RatVec h = rat_vec(*highlight);
    Pt u = unit(h);
    Pt p = canvas(u, 0.85);
    svg += "  <circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) +
           "\" r=\"5\" fill=\"#cc2222\"/>\n";
    svg += label({p.x, p.y - 10}, coord_label(h));
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace vgit
