// Command-line front end for the lamination toolkit.

#include "lam/core.hpp"
#include "lam/io.hpp"
#include "lam/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace lam;

namespace {

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f)
    throw DomainError("cannot write " + out);
  f << text;
}

std::string gap_report(const GapGen& g) {
  std::ostringstream os;
  os << "gap: " << g.serialize() << "\n";
  os << "kind: " << str(g.kind()) << "\n";
  if (g.kind() != GapKind::CaterpillarGap && g.kind() != GapKind::AttachedFatou) {
    os << "major: " << g.major().str() << "\n";
    if (!g.major_hole().degenerate())
      os << "major_hole_length: " << arc_length(g.major_hole()).str() << "\n";
  } else if (g.kind() == GapKind::CaterpillarGap) {
    os << "head: " << g.major().str() << "\n";
  }
  if (g.major_period() > 0)
    os << "period: " << g.major_period() << "\n";
  auto en = g.enumerate();
  os << "vertices: " << en.vertices.size() << "\n";
  for (auto& v : en.vertices)
    os << "  " << v.str() << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with invariant laminations of the circle"};
  app.require_subcommand(1);

  std::string chord_text, set_text, kind, in, out, rho_text, gap_text;
  int depth = 4, d = 3, orbits = 1, bound = 0, size = 600;
  bool labels = false;

  auto* cc = app.add_subcommand("classify-critical-leaf", "classify a critical chord of sigma_3");
  cc->add_option("chord", chord_text, "critical chord p/q-r/s")->required();

  auto* bg = app.add_subcommand("build-gap", "invariant quadratic gap U(c) of a critical chord");
  bg->add_option("chord", chord_text, "critical chord")->required();
  bg->add_option("--depth", depth, "pullback depth");

  auto* vs = app.add_subcommand("vassal", "vassal gap of the periodic-type gap U(c)");
  vs->add_option("chord", chord_text, "critical chord of periodic type")->required();
  vs->add_option("--depth", depth, "pullback depth");

  auto* bc = app.add_subcommand("build-canonical", "build a canonical lamination");
  bc->add_option("--kind", kind, "quadratic-gap | diameter | rotational | quadratic-d2")
      ->required()
      ->check(CLI::IsMember({"quadratic-gap", "diameter", "rotational", "quadratic-d2"}));
  bc->add_option("--chord", chord_text, "critical chord for quadratic-gap");
  bc->add_option("--set", set_text, "vertex list for rotational kinds");
  bc->add_option("--depth", depth, "pullback depth");
  bc->add_option("--out", out, "output file (default stdout)");

  auto* fr = app.add_subcommand("find-rotational", "enumerate invariant rotational sets");
  fr->add_option("--d", d, "degree")->required();
  fr->add_option("--rho", rho_text, "rotation number p/q")->required();
  fr->add_option("--orbits", orbits, "maximal number of orbits (1 or 2)");

  auto* ci = app.add_subcommand("check-invariance", "check a lamination file");
  ci->add_option("--in", in, "lamination file")->required();

  auto* cl = app.add_subcommand("clean", "remove isolated leaves until a fixpoint");
  cl->add_option("--in", in, "lamination file")->required();

  auto* sm = app.add_subcommand("classify-smp", "classify a lamination with simple core");
  sm->add_option("--in", in, "lamination file")->required();
  sm->add_option("--period-bound", bound, "period bound (0: derive from the leaves)");

  auto* cr = app.add_subcommand("core-report", "periodic rotational classes");
  cr->add_option("--in", in, "lamination file")->required();
  cr->add_option("--period-bound", bound, "period bound")->default_val(6);

  auto* pj = app.add_subcommand("project", "collapse a lamination through a quadratic gap");
  pj->add_option("--gap", gap_text, "critical chord c of the gap U(c), or 'a' / 'b' for FG_a / FG_b")
      ->required();
  pj->add_option("--in", in, "lamination file")->required();
  pj->add_option("--out", out, "output file (default stdout)");

  auto* rd = app.add_subcommand("render", "draw a lamination as SVG");
  rd->add_option("--in", in, "lamination file")->required();
  rd->add_option("--out", out, "SVG file (default stdout)");
  rd->add_option("--size", size, "image size in pixels");
  rd->add_flag("--labels", labels, "label highlighted angles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cc) {
      std::cout << classify_critical(Chord::parse(chord_text)).str() << "\n";
    } else if (*bg) {
      std::cout << gap_report(build_gap(Chord::parse(chord_text), depth));
    } else if (*vs) {
      GapGen u = build_gap(Chord::parse(chord_text), depth);
      GapGen v = vassal(u, depth);
      std::cout << "parent: " << u.serialize() << "\n";
      std::cout << "major_sibling: " << major_sibling(u).str() << "\n";
      std::cout << gap_report(v);
    } else if (*bc) {
      Lamination L;
      if (kind == "quadratic-gap") {
        if (chord_text.empty())
          throw ParseError("--chord is required for quadratic-gap");
        L = canonical_of_quadratic_gap(build_gap(Chord::parse(chord_text), depth), depth);
      } else if (kind == "diameter") {
        L = canonical_diameter(depth);
      } else {
        if (set_text.empty())
          throw ParseError("--set is required for " + kind);
        if (kind == "rotational")
          L = canonical_of_rotational(LamSet::parse(3, set_text), depth);
        else
          L = quadratic_canonical(LamSet::parse(2, set_text), depth);
      }
      emit(write_lamination(L), out);
    } else if (*fr) {
      for (auto& s : enumerate_rotational(d, Rational::parse(rho_text), orbits)) {
        auto rep = classify_rotational(s);
        std::cout << s.str() << " type=" << str(rep.type) << " orbits=" << rep.orbit_count << "\n";
      }
    } else if (*ci) {
      auto rep = check_invariance(load_lamination(in));
      std::cout << rep.str();
      return rep.ok() ? 0 : 1;
    } else if (*cl) {
      std::cout << clean(load_lamination(in)).str();
    } else if (*sm) {
      std::cout << classify_smp(load_lamination(in), bound).str();
    } else if (*cr) {
      std::cout << periodic_rotational_classes(load_lamination(in), bound).str();
    } else if (*pj) {
      Lamination L = load_lamination(in);
      GapGen u = gap_text == "a"   ? fg_a(L.depth)
                 : gap_text == "b" ? fg_b(L.depth)
                                   : build_gap(Chord::parse(gap_text), L.depth);
      emit(write_lamination(project_through_gap(u, L)), out);
    } else if (*rd) {
      RenderSpec spec;
      spec.width = spec.height = size;
      spec.label_angles = labels;
      emit(render(load_lamination(in), spec), out);
    }
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
