// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Expected values come from closed formulas computed here, not from the library.

#include "seifert/builder.hpp"
#include "seifert/error.hpp"
#include "seifert/io.hpp"
#include "seifert/render.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <random>
#include <regex>
#include <sstream>

using namespace seifert;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string samples_dir() {
#ifdef SEIFERT_SAMPLES_DIR
  return SEIFERT_SAMPLES_DIR;
#else
  return "samples";
#endif
}

KnotDiagram load(const std::string& name) { return parse(read_file(samples_dir() + "/" + name + ".json")); }

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s %d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  if (!pass) ++failures;
}

struct Oracle {
  std::int64_t r, c_mu1, c_mu2, splice_sum, twist_sum, slope_mu, cycles;
};

// H1(L(p,q)) = Z/p generated by lambda1; class (x,y) has order p / gcd(p,y).
Oracle oracle(std::int64_t p, std::int64_t q, std::int64_t x, std::int64_t y, std::int64_t w) {
  Oracle o{};
  o.r = p / std::gcd(p, y);
  o.c_mu2 = o.r * y / p;
  o.c_mu1 = o.r * x + q * o.c_mu2;
  o.splice_sum = -y * o.c_mu1;
  o.twist_sum = -o.r * w;
  o.slope_mu = -(y * o.c_mu1 + o.r * w);
  o.cycles = std::gcd(o.r, std::abs(o.slope_mu));
  return o;
}

std::string slope_str(const SeifertReport& rep) {
  return "(" + to_string(rep.slope_lambda) + ", " + std::to_string(rep.slope_mu) + ")";
}

void criterion_1() {
  const auto t0 = Clock::now();
  const KnotDiagram d = load("l31-two-lambda");
  const SeifertReport rep = build(d, {});
  const double dt = seconds_since(t0);
  const auto& c = rep.dec;
  const bool ok = d.lens.p == 3 && d.lens.q == 1 && rep.cls == TorusClass{0, 2} && c.n == 2 && c.a == 0 && c.b == 1 &&
                  c.r == 3 && c.c_mu1 == 2 && c.c_mu2 == 2 && rep.all_pass() && dt < 1.0;
  std::ostringstream s;
  s << "L(3,1) class (0,2): n=" << c.n << " a=" << c.a << " b=" << c.b << " r=" << c.r << " c_mu1=" << c.c_mu1
    << " c_mu2=" << c.c_mu2 << " (want 2 0 1 3 2 2), " << dt << " s (limit 1 s)";
  report(1, "l31-class-algebra", ok, s.str());
}

void criterion_2() {
  bool ok = true;
  std::ostringstream s;
  double worst = 0;
  for (const char* name : {"trefoil", "figure-eight", "unknot"}) {
    const auto t0 = Clock::now();
    const KnotDiagram d = load(name);
    const SeifertReport rep = build(d, {});
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    std::int64_t want_chi = -1, want_genus = 1;
    if (std::string(name) == "unknot") want_chi = 1, want_genus = 0;
    const bool one = rep.dec.r == 1 && rep.dec.c_mu1 == 0 && rep.euler == want_chi && rep.genus == want_genus &&
                     rep.boundary_count == 1 && rep.slope_lambda == 1 && rep.slope_mu == -rep.writhe &&
                     rep.all_pass() && dt < 1.0;
    ok = ok && one;
    s << name << " chi=" << rep.euler << " g=" << rep.genus << " slope=" << slope_str(rep) << " w=" << rep.writhe
      << (one ? "" : " [bad]") << "; ";
  }
  s << "max " << worst << " s (limit 1 s each)";
  report(2, "classical-oracle", ok, s.str());
}

void criterion_3() {
  bool ok = true;
  std::ostringstream s;
  double worst = 0;
  for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{2, 3}, {2, 5}, {3, 4}}) {
    const auto t0 = Clock::now();
    const std::string name = "torus-" + std::to_string(a) + "-" + std::to_string(b);
    const KnotDiagram d = load(name);
    const SeifertReport rep = build(d, {});
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    const bool one = d.lens.p == 1 && d.crossings.empty() && rep.cls == TorusClass{a, b} &&
                     rep.euler == a + b - a * b && rep.boundary_count == 1 && rep.genus == (a - 1) * (b - 1) / 2 &&
                     rep.slope_lambda == 1 && rep.slope_mu == -a * b && rep.all_pass() && dt < 1.0;
    ok = ok && one;
    s << name << " chi=" << rep.euler << " g=" << rep.genus << " slope=" << slope_str(rep) << (one ? "" : " [bad]")
      << "; ";
  }
  s << "max " << worst << " s (limit 1 s each)";
  report(3, "torus-knot-oracle", ok, s.str());
}

struct RandomCase {
  std::int64_t p, q, x, y;
  std::size_t crossings;
  std::uint64_t seed;
  KnotDiagram d;
};

std::vector<RandomCase> random_cases(std::size_t count, std::size_t& skipped) {
  std::vector<RandomCase> out;
  std::mt19937_64 rng(20240601);
  skipped = 0;
  for (std::uint64_t seed = 0; out.size() < count; ++seed) {
    const std::int64_t p = std::uniform_int_distribution<std::int64_t>(1, 7)(rng);
    std::vector<std::int64_t> qs;
    for (std::int64_t q = 0; q < p; ++q)
      if (std::gcd(p, q) == 1) qs.push_back(q);
    const std::int64_t q = qs[std::uniform_int_distribution<std::size_t>(0, qs.size() - 1)(rng)];
    std::uniform_int_distribution<std::int64_t> coord(-2, 2);
    const std::int64_t x = coord(rng), y = coord(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, 8)(rng);
    try {
      out.push_back({p, q, x, y, k, seed, to_diagram(gen_random(make_lens(p, q), {x, y}, k, seed))});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::GenerationFailure) throw;
      ++skipped;
    }
  }
  return out;
}

void criteria_4_and_5() {
  const auto t0 = Clock::now();
  std::size_t skipped = 0;
  const auto cases = random_cases(200, skipped);
  std::vector<KnotDiagram> ds;
  for (const auto& c : cases) ds.push_back(c.d);
  const auto reports = build_batch(ds, {});
  const double dt = seconds_since(t0);

  std::size_t bad4 = 0, bad5 = 0, errors = 0, crossings = 0;
  std::string first4, first5;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    const auto& rep = reports[i];
    crossings = std::max(crossings, c.d.crossings.size());
    const std::string tag = "L(" + std::to_string(c.p) + "," + std::to_string(c.q) + ") (" + std::to_string(c.x) +
                            "," + std::to_string(c.y) + ") seed " + std::to_string(c.seed);
    bool failed_build = false;
    for (const auto& v : rep.verdicts)
      if (v.name == "build") failed_build = true;
    if (failed_build) ++errors;
    const Oracle o = oracle(c.p, c.q, c.x, c.y, writhe(c.d));
    const bool ok4 = !failed_build && rep.slope_lambda == o.r && rep.slope_mu == o.slope_mu &&
                     rep.corollary == BoundarySlope{o.r, o.slope_mu} && rep.splice_sum == o.splice_sum &&
                     rep.twist_sum == o.twist_sum;
    TorusClass plus{0, 0};
    for (const auto& k : rep.l_plus_classes) plus = {plus.x + k.x, plus.y + k.y};
    const bool ok5 = !failed_build && rep.orientable && rep.non_tube_cycles == 0 &&
                     static_cast<std::int64_t>(rep.boundary_count) == o.cycles &&
                     plus == TorusClass{-o.c_mu2 * c.q, o.c_mu2 * c.p} && rep.euler == rep.euler_incremental &&
                     rep.all_pass();
    if (!ok4 && bad4++ == 0) first4 = tag;
    if (!ok5 && bad5++ == 0) first5 = tag;
  }
  std::ostringstream s4, s5;
  s4 << cases.size() - bad4 << "/" << cases.size() << " slope, splice and twist sums exact (max " << crossings
     << " crossings, " << skipped << " generator requests skipped, " << errors << " build errors), " << dt
     << " s (limit 60 s)";
  if (bad4) s4 << "; first failure " << first4;
  s5 << cases.size() - bad5 << "/" << cases.size()
     << " orientable, tube-only boundary, gcd(r,|mu|) cycles, [L+] = c_mu2 mu2, chi recount = bookkeeping";
  if (bad5) s5 << "; first failure " << first5;
  report(4, "corollary-consistency", bad4 == 0 && errors == 0 && dt < 60.0, s4.str());
  report(5, "conservation", bad5 == 0 && errors == 0, s5.str());
}

ErrorCode rejection(const DiagramFile& f) {
  try {
    to_diagram(parse_diagram_file(serialize(f)));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Io;
}

DiagramFile polygon_file(std::vector<std::pair<int, int>> tenths, std::size_t tags) {
  DiagramFile f;
  f.p = 3;
  f.q = 1;
  for (auto [x, y] : tenths) f.vertices.push_back({Rational(x, 10), Rational(y, 10)});
  for (auto& v : f.vertices) v.x.canonicalize(), v.y.canonicalize();
  f.windings.assign(f.vertices.size(), TorusClass{0, 0});
  for (std::size_t k = 0; k < tags; ++k) f.crossings.push_back({k, Over::Earlier});
  return f;
}

std::string mutate(std::string text, std::mt19937_64& rng) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto small = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int rounds = small(1, 3);
  for (int k = 0; k < rounds; ++k) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    const int mode = small(0, 9);
    if (mode <= 2 || j.is_discarded()) {
      if (text.empty()) return text;
      const std::size_t at = pick(text.size());
      if (mode == 0) text[at] = static_cast<char>(small(32, 126));
      else if (mode == 1) text.erase(at, small(1, 8));
      else text.insert(at, text.substr(pick(text.size()), small(1, 8)));
      continue;
    }
    try {
      auto& verts = j.at("vertices");
      auto& winds = j.at("windings");
      auto& tags = j.at("crossings");
      switch (mode) {
        case 3:
          if (!verts.empty())
            verts[pick(verts.size())][pick(2)] = std::to_string(small(-2, 12)) + "/" + std::to_string(small(0, 11));
          break;
        case 4:
          if (!winds.empty()) winds[pick(winds.size())][pick(2)] = small(-3, 3);
          break;
        case 5:
          if (!tags.empty()) tags.erase(pick(tags.size()));
          else tags.push_back({{"index", 0}, {"over", "earlier"}});
          break;
        case 6:
          if (!tags.empty()) {
            auto& t = tags[pick(tags.size())];
            t["over"] = t["over"] == "earlier" ? "later" : "earlier";
            if (small(0, 3) == 0) t["index"] = small(-1, 10);
          }
          break;
        case 7:
          j["lens"][small(0, 1) ? "p" : "q"] = small(-3, 10);
          break;
        case 8:
          if (!verts.empty()) {
            const std::size_t i = pick(verts.size());
            if (small(0, 1)) {
              verts.erase(i);
              winds.erase(std::min(i, winds.size() - 1));
            } else {
              verts.insert(verts.begin() + i, verts[i]);
            }
          }
          break;
        default:
          text.resize(pick(text.size() + 1));
          continue;
      }
    } catch (const nlohmann::json::exception&) {
    }
    text = j.dump(small(0, 1) ? 2 : -1);
  }
  return text;
}

void criterion_6() {
  std::ostringstream s;
  const ErrorCode triple =
      rejection(polygon_file({{9, 5}, {1, 5}, {3, 1}, {7, 9}, {3, 9}, {7, 1}}, 2));
  const ErrorCode tangent = rejection(polygon_file({{1, 5}, {9, 5}, {9, 8}, {5, 5}, {1, 8}}, 0));
  DiagramFile tref = to_file(load("trefoil"));
  tref.crossings.pop_back();
  const ErrorCode mismatch = rejection(tref);
  const bool named = triple == ErrorCode::TriplePoint && tangent == ErrorCode::NonTransverse &&
                     mismatch == ErrorCode::CrossingCountMismatch;
  s << "triple-point -> " << to_string(triple) << ", tangency -> " << to_string(tangent) << ", tag mismatch -> "
    << to_string(mismatch);

  const auto t0 = Clock::now();
  std::mt19937_64 rng(7);
  std::size_t accepted = 0, rejected = 0, crashes = 0;
  std::string crash;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const std::int64_t p = static_cast<std::int64_t>(1 + i % 7);
    const std::int64_t q = p == 1 ? 0 : 1;
    std::string text;
    try {
      text = serialize(gen_random(make_lens(p, q), {static_cast<std::int64_t>(i % 3), 1}, i % 5, i));
    } catch (const Error&) {
      text = serialize(to_file(load("trefoil")));
    }
    text = mutate(text, rng);
    try {
      const SeifertReport rep = build(parse(text), {i});
      ++accepted;
      (void)rep;
    } catch (const Error&) {
      ++rejected;
    } catch (const std::exception& e) {
      if (crashes++ == 0) crash = e.what();
    }
  }
  const double dt = seconds_since(t0);
  s << "; fuzz 1000 mutated files: " << accepted << " built, " << rejected << " rejected with named errors, "
    << crashes << " unnamed failures, " << dt << " s (limit 60 s)";
  if (crashes) s << "; first: " << crash;
  report(6, "robustness", named && crashes == 0 && dt < 60.0, s.str());
}

void criterion_7() {
  std::ostringstream s;
  std::size_t files = 0, identical = 0;
  for (const auto& entry : std::filesystem::directory_iterator(samples_dir())) {
    if (entry.path().extension() != ".json") continue;
    ++files;
    const std::string text = read_file(entry.path().string());
    const DiagramFile f = parse_diagram_file(text);
    if (serialize(f) == text && to_file(to_diagram(f)) == f) ++identical;
  }
  s << identical << "/" << files << " samples round-trip byte-identical";

  bool slopes = true;
  for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{3, 1}, {5, 2}, {1, 0}}) {
    const std::string svg = render_svg(to_diagram(gen_random(make_lens(p, q), {1, 0}, 1, 3)));
    std::smatch m;
    std::vector<std::pair<long, long>> pts;
    if (std::regex_search(svg, m, std::regex("<polygon id=\"domain\"[^>]*points=\"([^\"]*)\""))) {
      std::istringstream in(m[1].str());
      long x, y;
      char comma;
      while (in >> x >> comma >> y) pts.emplace_back(x, y);
    }
    bool ok = pts.size() == 4;
    // edges 0->1 and 3->2 are the images of y = 0 and y = 1; svg y grows downwards
    for (auto [u, v] : {std::pair<int, int>{0, 1}, {3, 2}})
      if (ok) ok = -(pts[v].second - pts[u].second) * p == -q * (pts[v].first - pts[u].first);
    if (ok) ok = pts[0].first == pts[3].first && pts[1].first == pts[2].first && pts[0].second > pts[3].second;
    slopes = slopes && ok;
    s << "; L(" << p << "," << q << ") edge slope -" << q << "/" << p << (ok ? " ok" : " wrong");
  }
  report(7, "interface", files > 0 && identical == files && slopes, s.str());
}

void guarded(const std::function<void()>& f, int id, const char* name) {
  try {
    f();
  } catch (const std::exception& e) {
    report(id, name, false, std::string("threw: ") + e.what());
  }
}

}  // namespace

int main() {
  guarded(criterion_1, 1, "l31-class-algebra");
  guarded(criterion_2, 2, "classical-oracle");
  guarded(criterion_3, 3, "torus-knot-oracle");
  guarded(criteria_4_and_5, 4, "corollary-consistency");
  guarded(criterion_6, 6, "robustness");
  guarded(criterion_7, 7, "interface");
  return failures == 0 ? 0 : 1;
}
