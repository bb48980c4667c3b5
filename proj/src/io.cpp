#include "seifert/io.hpp"

#include "seifert/error.hpp"
#include "seifert/generate.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace seifert {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::Parse, where + ": " + what, Stage::Parse);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) parse_fail(where, "expected an integer");
  return v.get<std::int64_t>();
}

Rational rational(const json& v, const std::string& where) {
  if (!v.is_string()) parse_fail(where, "expected a \"num/den\" string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) parse_fail(where, e.what());
    throw;
  }
}

const json& pair_at(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) parse_fail(where, "expected a pair");
  return v;
}

std::string position(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json class_json(TorusClass c) { return json::array({c.x, c.y}); }

json classes_json(const std::vector<TorusClass>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(class_json(c));
  return a;
}

json rationals_json(const std::vector<Rational>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(to_string(r));
  return a;
}

json number_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return to_string(r);
}

}  // namespace

DiagramFile parse_diagram_file(const std::string& text) {
  if (text.size() > (16u << 20)) throw Error(ErrorCode::ResourceLimit, "diagram file larger than 16 MiB", Stage::Parse);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(position(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
  DiagramFile f;
  const json& lens = field(doc, "lens", "$");
  f.p = integer(field(lens, "p", "lens"), "lens.p");
  f.q = integer(field(lens, "q", "lens"), "lens.q");

  const json& verts = field(doc, "vertices", "$");
  if (!verts.is_array()) parse_fail("vertices", "expected an array");
  if (verts.size() > kMaxCycleVertices) throw Error(ErrorCode::ResourceLimit, "too many vertices", Stage::Parse);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    const json& pr = pair_at(verts[i], where);
    f.vertices.push_back({rational(pr[0], where + "[0]"), rational(pr[1], where + "[1]")});
  }
  const json& winds = field(doc, "windings", "$");
  if (!winds.is_array()) parse_fail("windings", "expected an array");
  if (winds.size() > kMaxCycleVertices) throw Error(ErrorCode::ResourceLimit, "too many windings", Stage::Parse);
  for (std::size_t i = 0; i < winds.size(); ++i) {
    const std::string where = "windings[" + std::to_string(i) + "]";
    const json& pr = pair_at(winds[i], where);
    f.windings.push_back({integer(pr[0], where + "[0]"), integer(pr[1], where + "[1]")});
  }
  if (f.windings.size() != f.vertices.size())
    parse_fail("windings", "expected " + std::to_string(f.vertices.size()) + " entries, one per edge");

  const json& cross = field(doc, "crossings", "$");
  if (!cross.is_array()) parse_fail("crossings", "expected an array");
  for (std::size_t i = 0; i < cross.size(); ++i) {
    const std::string where = "crossings[" + std::to_string(i) + "]";
    const std::int64_t idx = integer(field(cross[i], "index", where), where + ".index");
    if (idx < 0) parse_fail(where + ".index", "negative index");
    const json& over = field(cross[i], "over", where);
    if (!over.is_string() || (over != "earlier" && over != "later"))
      parse_fail(where + ".over", "expected \"earlier\" or \"later\"");
    f.crossings.push_back({static_cast<std::size_t>(idx), over == "earlier" ? Over::Earlier : Over::Later});
  }
  return f;
}

std::string serialize(const DiagramFile& f) {
  json doc;
  doc["lens"] = {{"p", f.p}, {"q", f.q}};
  json verts = json::array();
  for (const auto& v : f.vertices) verts.push_back(json::array({to_string(v.x), to_string(v.y)}));
  doc["vertices"] = std::move(verts);
  doc["windings"] = classes_json(f.windings);
  json cross = json::array();
  for (const auto& c : f.crossings)
    cross.push_back({{"index", c.index}, {"over", c.over == Over::Earlier ? "earlier" : "later"}});
  doc["crossings"] = std::move(cross);
  return doc.dump(2) + "\n";
}

KnotDiagram to_diagram(const DiagramFile& f) {
  try {
    const LensSpace lens = make_lens(f.p, f.q);
    PLCycle curve(f.vertices, f.windings);
    std::vector<Over> over(f.crossings.size(), Over::Earlier);
    std::vector<bool> seen(f.crossings.size(), false);
    for (const auto& c : f.crossings) {
      if (c.index >= f.crossings.size() || seen[c.index])
        throw Error(ErrorCode::CrossingCountMismatch,
                    "crossing indices must be 0.." + std::to_string(f.crossings.size()) + " exclusive, each once",
                    Stage::Validation);
      seen[c.index] = true;
      over[c.index] = c.over;
    }
    return validate_regular(lens, curve, over);
  } catch (const Error& e) {
    if (e.stage() == Stage::Validation) throw;
    throw Error(e.code(), e.what(), Stage::Validation);
  }
}

DiagramFile to_file(const KnotDiagram& d) {
  DiagramFile f;
  f.p = d.lens.p;
  f.q = d.lens.q;
  f.vertices = d.curve.vertices();
  f.windings = d.curve.windings();
  for (std::size_t k = 0; k < d.crossings.size(); ++k) f.crossings.push_back({k, d.crossings[k].over});
  return f;
}

KnotDiagram parse(const std::string& text) { return to_diagram(parse_diagram_file(text)); }

DiagramFile gen_random(const LensSpace& lens, TorusClass target, std::size_t crossings, std::uint64_t seed) {
  return to_file(random_diagram(lens, target, crossings, seed));
}

std::string report_json(const SeifertReport& r) {
  json doc;
  doc["lens"] = {{"p", r.lens.p}, {"q", r.lens.q}};
  doc["class"] = class_json(r.cls);
  doc["decomposition"] = {{"n", r.dec.n},         {"a", r.dec.a},         {"b", r.dec.b},
                          {"r", r.dec.r},         {"c_mu1", r.dec.c_mu1}, {"c_mu2", r.dec.c_mu2}};
  doc["writhe"] = r.writhe;
  doc["crossings"] = r.crossings;
  doc["link"] = {{"components", classes_json(r.l_components)}};
  doc["upper_link"] = {{"classes", classes_json(r.l_plus_classes)},
                       {"null", r.l_plus_null},
                       {"mu1", r.l_plus_mu1},
                       {"mu2", r.l_plus_mu2},
                       {"other", r.l_plus_other},
                       {"null_cap_depths", r.null_cap_depths}};
  doc["lower_link"] = {{"classes", classes_json(r.l_minus_classes)}};
  doc["splices"] = {{"count", r.splice_count}, {"signed_sum", r.splice_sum}};
  doc["twist_sum"] = r.twist_sum;
  const Placement& pl = r.placement;
  doc["placement"] = {{"upper_heights", rationals_json(pl.upper_mu1_heights)},
                      {"lower_heights", rationals_json(pl.lower_heights)},
                      {"offset", to_string(pl.offset)},
                      {"system_x0", to_string(pl.system_x0)},
                      {"eps_parallel", to_string(pl.eps_parallel)},
                      {"ball_radius", to_string(pl.ball_radius)},
                      {"seed", pl.seed}};
  doc["surface"] = {{"faces", r.faces},
                    {"euler", r.euler},
                    {"euler_incremental", r.euler_incremental},
                    {"orientable", r.orientable},
                    {"components", r.surface_components},
                    {"genus", r.genus},
                    {"boundary_count", r.boundary_count},
                    {"caps",
                     {{"lower_disks", r.caps.lower_disks},
                      {"mu2_disks", r.caps.mu2_disks},
                      {"null_disks", r.caps.null_disks},
                      {"annuli", r.caps.annuli}}}};
  json cycles = json::array();
  for (const auto& c : r.cycle_slopes) cycles.push_back({{"lambda", number_json(c.dlambda)}, {"mu", c.dmu}});
  doc["boundary_slope"] = {{"lambda", number_json(r.slope_lambda)}, {"mu", r.slope_mu}, {"cycles", cycles}};
  doc["corollary_slope"] = {{"lambda", r.corollary.lambda_coeff}, {"mu", r.corollary.mu_coeff}};
  json verdicts = json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back(
        {{"name", v.name}, {"pass", v.pass}, {"expected", v.expected}, {"actual", v.actual}, {"stage", to_string(v.stage)}});
  doc["verdicts"] = std::move(verdicts);
  doc["pass"] = r.all_pass();
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path, Stage::Io);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path, Stage::Io);
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path, Stage::Io);
}

}  // namespace seifert
