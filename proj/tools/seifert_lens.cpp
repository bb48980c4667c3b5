// seifert-lens: build rational Seifert surfaces for knot diagrams in L(p,q).

#include "seifert/builder.hpp"
#include "seifert/error.hpp"
#include "seifert/generate.hpp"
#include "seifert/io.hpp"
#include "seifert/render.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

using namespace seifert;

namespace {

int exit_code(Stage s) {
  switch (s) {
    case Stage::Parse: return 3;
    case Stage::Validation: return 4;
    case Stage::Io: return 6;
    default: return 5;
  }
}

std::vector<Overlay> overlays_for(const KnotDiagram& d, const SeifertReport& rep) {
  std::vector<Overlay> out;
  const SmoothingResult L = smooth_crossings(d);
  out.push_back({L.components, "#2a9d3a", "link-L"});
  Placement plan = rep.placement;
  const UpperLink up = build_upper_link(d.lens, L, plan, rep.dec.r, rep.dec.c_mu1);
  out.push_back({up.parallel, "#9aa7b0", "parallel-rL"});
  out.push_back({up.components, "#d62828", "upper-L-plus"});
  out.push_back({build_lower_link(plan, rep.dec.c_mu1), "#1d4ed8", "lower-L-minus"});
  return out;
}

KnotDiagram named_sample(const std::string& name) {
  const LensSpace s3 = make_lens(1, 0);
  if (name == "unknot")
    return validate_regular(make_lens(5, 2),
                            PLCycle({{Rational(1, 4), Rational(1, 4)},
                                     {Rational(3, 4), Rational(1, 4)},
                                     {Rational(3, 4), Rational(3, 4)},
                                     {Rational(1, 4), Rational(3, 4)}},
                                    std::vector<TorusClass>(4, TorusClass{0, 0})),
                            {});
  if (name == "trefoil") return closed_braid_in_disk(s3, 2, {{1, 1}, {1, 1}, {1, 1}});
  if (name == "figure-eight") return closed_braid_in_disk(s3, 3, {{1, 1}, {2, -1}, {1, 1}, {2, -1}});
  if (name == "l31-two-lambda") return torus_braid(make_lens(3, 1), 2, {{1, 1}}, {0, 1});
  const std::map<std::string, TorusClass> torus{{"torus-2-3", {2, 3}}, {"torus-2-5", {2, 5}}, {"torus-3-4", {3, 4}}};
  if (const auto it = torus.find(name); it != torus.end()) {
    const TorusClass c = it->second;
    std::vector<Vec2> disps(3, Vec2{Rational(c.x, 3), Rational(c.y, 3)});
    for (auto& v : disps) {
      v.x.canonicalize();
      v.y.canonicalize();
    }
    return validate_regular(s3, PLCycle::from_displacements({Rational(1, 7), Rational(1, 11)}, disps), {});
  }
  throw Error(ErrorCode::InvalidParameters,
              "unknown sample '" + name + "' (unknot, trefoil, figure-eight, l31-two-lambda, torus-2-3, torus-2-5, torus-3-4)",
              Stage::Validation);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) std::cout << text;
  else write_file(path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational Seifert surfaces of knots in lens spaces"};
  app.require_subcommand(1);

  std::string file, json_out, svg_out, out_path, sample_name;
  std::uint64_t seed = 0;
  bool verify_only = false, mirror = false, with_overlays = false;
  std::int64_t p = 1, q = 0;
  std::vector<std::int64_t> cls;
  std::size_t crossings = 0;

  auto* run = app.add_subcommand("run", "build the surface and print the JSON report");
  run->add_option("file", file, "diagram file")->required();
  run->add_option("--json", json_out, "write the report here instead of stdout");
  run->add_option("--svg", svg_out, "also render the diagram with L, rL, L+ and L- overlays");
  run->add_option("--seed", seed, "placement seed");
  run->add_flag("--verify-only", verify_only, "print one line per verdict instead of the report");
  run->add_flag("--mirror-writhe", mirror, "check under the mirrored crossing-sign convention");

  auto* gen = app.add_subcommand("gen", "write a random regular diagram");
  gen->add_option("--p", p, "lens parameter p")->required();
  gen->add_option("--q", q, "lens parameter q")->required();
  gen->add_option("--class", cls, "knot class X Y")->expected(2)->required();
  gen->add_option("--crossings", crossings, "crossing count")->required();
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--out", out_path, "output file (default stdout)");

  auto* render = app.add_subcommand("render", "draw a diagram as SVG");
  render->add_option("file", file, "diagram file")->required();
  render->add_option("--svg", svg_out, "output file")->required();
  render->add_flag("--overlays", with_overlays, "add L, rL, L+ and L- from a build");
  render->add_option("--seed", seed, "placement seed for the overlays");

  auto* sample = app.add_subcommand("sample", "write one of the built-in sample diagrams");
  sample->add_option("name", sample_name, "unknot, trefoil, figure-eight, l31-two-lambda, torus-2-3, torus-2-5, torus-3-4")
      ->required();
  sample->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*run) {
      const KnotDiagram d = parse(read_file(file));
      const SeifertReport rep = build(d, {seed, mirror ? -1 : 1});
      if (!json_out.empty()) write_file(json_out, report_json(rep));
      if (!svg_out.empty()) write_file(svg_out, render_svg(d, overlays_for(d, rep)));
      if (verify_only) {
        for (const auto& v : rep.verdicts)
          std::cout << (v.pass ? "PASS " : "FAIL ") << v.name << "  expected " << v.expected << "  actual " << v.actual
                    << "\n";
      } else if (json_out.empty()) {
        std::cout << report_json(rep);
      }
      return rep.all_pass() ? 0 : 1;
    }
    if (*gen) {
      if (cls.size() != 2) throw Error(ErrorCode::InvalidParameters, "--class needs two integers", Stage::Validation);
      const LensSpace lens = [&] {
        try {
          return make_lens(p, q);
        } catch (const Error& e) {
          throw Error(e.code(), e.what(), Stage::Validation);
        }
      }();
      emit(serialize(gen_random(lens, {cls[0], cls[1]}, crossings, seed)), out_path);
      return 0;
    }
    if (*render) {
      const KnotDiagram d = parse(read_file(file));
      std::vector<Overlay> ov;
      if (with_overlays) ov = overlays_for(d, build(d, {seed, 1}));
      write_file(svg_out, render_svg(d, ov));
      return 0;
    }
    if (*sample) {
      emit(serialize(to_file(named_sample(sample_name))), out_path);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << ", stage " << to_string(e.stage()) << "]: " << e.what() << "\n";
    return exit_code(e.stage());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
  return 2;
}
