#include "lam/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace lam {

namespace {

struct Pt {
  double x, y;
};

std::string fmt(double v) {
  char buf[64];
  if (std::fabs(v) < 5e-7)
    v = 0.0;
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

struct Frame {
  double cx, cy, r;
  Pt screen(const Pt& p) const { return {cx + r * p.x, cy - r * p.y}; }
};

Frame frame_of(const RenderSpec& spec) {
  double m = std::min(spec.width, spec.height);
  return {spec.width / 2.0, spec.height / 2.0, 0.45 * m};
}

Pt on_circle(const Angle& a) {
  double t = a.to_double() * 2.0 * M_PI;
  return {std::cos(t), std::sin(t)};
}

// arc command from the screen point of a to the screen point of b
std::string arc_to(const Angle& a, const Angle& b, const Frame& f) {
  Pt p = on_circle(a), q = on_circle(b);
  Pt sq = f.screen(q);
  double dot = p.x * q.x + p.y * q.y;
  if (std::fabs(1.0 + dot) < 1e-12)
    return "L " + fmt(sq.x) + " " + fmt(sq.y);
  Pt c{(p.x + q.x) / (1.0 + dot), (p.y + q.y) / (1.0 + dot)};
  double rad = std::sqrt(c.x * c.x + c.y * c.y - 1.0);
  Pt sp = f.screen(p), sc = f.screen(c);
  double cross = (sp.x - sc.x) * (sq.y - sc.y) - (sp.y - sc.y) * (sq.x - sc.x);
  int sweep = cross > 0 ? 1 : 0;
  return "A " + fmt(rad * f.r) + " " + fmt(rad * f.r) + " 0 0 " + std::to_string(sweep) + " " +
         fmt(sq.x) + " " + fmt(sq.y);
}

std::string move_to(const Angle& a, const Frame& f) {
  Pt s = f.screen(on_circle(a));
  return "M " + fmt(s.x) + " " + fmt(s.y);
}

void header(std::ostringstream& os, const RenderSpec& spec) {
  Frame f = frame_of(spec);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width
     << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height
     << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  os << "<circle cx=\"" << fmt(f.cx) << "\" cy=\"" << fmt(f.cy) << "\" r=\"" << fmt(f.r)
     << "\" fill=\"none\" stroke=\"" << spec.palette.at(3) << "\" stroke-width=\""
     << fmt(spec.circle_stroke) << "\"/>\n";
}

void polygon(std::ostringstream& os, const std::vector<Angle>& v, const RenderSpec& spec) {
  if (v.size() < 3)
    return;
  Frame f = frame_of(spec);
  os << "<path d=\"" << move_to(v[0], f);
  for (std::size_t i = 0; i < v.size(); ++i)
    os << " " << arc_to(v[i], v[(i + 1) % v.size()], f);
  os << " Z\" fill=\"" << spec.palette.at(1) << "\" stroke=\"none\"/>\n";
}

void chord(std::ostringstream& os, const Chord& c, const RenderSpec& spec, bool hi) {
  Frame f = frame_of(spec);
  os << "<path d=\"" << move_to(c.a(), f) << " " << arc_to(c.a(), c.b(), f)
     << "\" fill=\"none\" stroke=\"" << spec.palette.at(hi ? 2 : 0) << "\" stroke-width=\""
     << fmt(hi ? spec.highlight_stroke : spec.leaf_stroke) << "\"/>\n";
}

void labels(std::ostringstream& os, const std::vector<Angle>& pts, const RenderSpec& spec) {
  if (!spec.label_angles)
    return;
  Frame f = frame_of(spec);
  for (auto& a : pts) {
    Pt p = on_circle(a);
    Pt s = f.screen({1.08 * p.x, 1.08 * p.y});
    os << "<text x=\"" << fmt(s.x) << "\" y=\"" << fmt(s.y)
       << "\" font-size=\"10\" text-anchor=\"middle\">" << a.str() << "</text>\n";
  }
}

void body(std::ostringstream& os, const std::vector<Chord>& chords,
          const std::vector<std::vector<Angle>>& fills, const RenderSpec& spec) {
  if (spec.fill_gaps)
    for (auto& v : fills)
      polygon(os, v, spec);
  for (auto& c : chords)
    chord(os, c, spec, false);
  for (auto& c : spec.highlight)
    chord(os, c, spec, true);
  std::vector<Angle> pts;
  for (auto& c : spec.highlight) {
    pts.push_back(c.a());
    pts.push_back(c.b());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  labels(os, pts, spec);
}

}  // namespace

std::string geodesic_path(const Angle& a, const Angle& b, const RenderSpec& spec) {
  return arc_to(a, b, frame_of(spec));
}

std::string render(const Lamination& L, const RenderSpec& spec) {
  std::ostringstream os;
  header(os, spec);
  std::vector<std::vector<Angle>> fills;
  for (auto& p : L.finite_gaps())
    fills.push_back(p.vertices());
  body(os, L.leaves, fills, spec);
  os << "</svg>\n";
  return os.str();
}

std::string render(const LamSet& g, const RenderSpec& spec) {
  std::ostringstream os;
  header(os, spec);
  std::vector<Chord> edges;
  for (auto& h : holes(g))
    if (std::find(edges.begin(), edges.end(), h.edge) == edges.end())
      edges.push_back(h.edge);
  body(os, edges, {g.vertices()}, spec);
  labels(os, g.vertices(), spec);
  os << "</svg>\n";
  return os.str();
}

std::string render(const GapGen& g, const RenderSpec& spec) {
  std::ostringstream os;
  header(os, spec);
  auto en = g.enumerate();
  std::vector<Chord> edges;
  for (auto& h : en.holes)
    edges.emplace_back(h.start, h.end);
  body(os, edges, {en.vertices}, spec);
  os << "</svg>\n";
  return os.str();
}

}  // namespace lam
