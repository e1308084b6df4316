#include "snc/verify.hpp"

#include "snc/coords.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace snc {

using json = nlohmann::json;

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

void Report::append(const Report& other) {
  for (const auto& c : other.checks) checks.push_back(c);
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << "CHECK " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " expected=" << c.expected
       << " actual=" << c.actual << " ref=\"" << c.ref << "\"\n";
  }
  os << "SUMMARY " << title << ": " << (checks.size() - failures()) << "/" << checks.size() << " passed\n";
  return os.str();
}

std::string Report::to_json() const {
  json j;
  j["title"] = title;
  j["checks"] = json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"pass", c.pass},
                           {"expected", c.expected},
                           {"actual", c.actual},
                           {"ref", c.ref},
                           {"provenance", c.provenance}});
  }
  j["passed"] = checks.size() - failures();
  j["total"] = checks.size();
  return j.dump(2) + "\n";
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("fixture json: ") + e.what());
  }
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::vector<std::string> strings_of(const json& j) {
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(x.get<std::string>());
  return out;
}

const std::set<std::string>& provenance_words() {
  static const std::set<std::string> w{"published", "trivial", "derived"};
  return w;
}

// Every check names its expected value, provenance and anchor.
void require_fields(const json& c) {
  for (const char* f : {"name", "expected", "provenance", "anchor"}) {
    if (!c.contains(f)) {
      std::string n = c.contains("name") ? c["name"].get<std::string>() : "?";
      throw ParseError(0, "check " + n + " lacks '" + f + "'");
    }
  }
  if (!provenance_words().count(c["provenance"].get<std::string>()))
    throw ParseError(0, "check " + c["name"].get<std::string>() + ": unknown provenance");
  if (c["anchor"].get<std::string>().empty()) throw ParseError(0, "check " + c["name"].get<std::string>() + ": empty anchor");
}

CheckResult make_result(const json& c, std::string actual) {
  CheckResult r;
  r.name = c["name"].get<std::string>();
  r.expected = c["expected"].get<std::string>();
  r.actual = std::move(actual);
  r.pass = r.actual == r.expected;
  r.ref = c["anchor"].get<std::string>();
  r.provenance = c["provenance"].get<std::string>();
  return r;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string sign_word(const BigInt& v) {
  if (v < 0) return "negative";
  if (v > 0) return "positive";
  return "zero";
}

// --- scenario state -----------------------------------------------------------------------------

struct Scenario {
  SurfaceLattice lattice{0};
  std::vector<std::string> boundary;
  std::vector<std::string> exceptional;
  std::string center;
  std::map<std::string, Point> points;
  std::map<std::string, Curve> curves;
  std::map<std::string, Mat3> transforms;
  std::optional<Configuration> config;

  DualGraph boundary_graph() const { return extract_boundary_graph(lattice, boundary); }
  DualGraph exceptional_graph() const { return extract_boundary_graph(lattice, exceptional); }
  std::vector<std::string> union_names() const {
    std::vector<std::string> u = boundary;
    u.insert(u.end(), exceptional.begin(), exceptional.end());
    return u;
  }
  DualGraph graph(const std::string& of) const {
    if (of == "boundary") return boundary_graph();
    if (of == "exceptional") return exceptional_graph();
    if (of == "union") return extract_boundary_graph(lattice, union_names());
    throw DomainError("unknown graph '" + of + "'");
  }

  Point point(const std::string& s) const {
    if (!s.empty() && s.front() == '[') return parse_point(s);
    if (auto it = points.find(s); it != points.end()) return it->second;
    if (config) return config->point(s);
    throw DomainError("unknown point " + s);
  }
  Curve curve(const std::string& s) const {
    if (s.find('=') != std::string::npos) return parse_curve(s);
    if (auto it = curves.find(s); it != curves.end()) return it->second;
    if (config) return config->line(s);
    throw DomainError("unknown curve " + s);
  }
  const Mat3& transform(const std::string& s) const {
    auto it = transforms.find(s);
    if (it == transforms.end()) throw DomainError("unknown transform " + s);
    return it->second;
  }
};

Configuration configuration_of(const json& j) {
  Configuration c;
  for (const auto& [n, p] : j.at("points").items()) c.points.emplace_back(n, parse_point(p.get<std::string>()));
  for (const auto& [n, eq] : j.at("lines").items()) {
    Curve cv = parse_curve(eq.get<std::string>());
    if (!std::holds_alternative<Line>(cv)) throw DomainError("configuration line " + n + " is not a line");
    c.lines.emplace_back(n, std::get<Line>(cv));
  }
  if (j.contains("joins"))
    for (const auto& jn : j["joins"]) c.joins.push_back({jn[0].get<std::string>(), jn[1].get<std::string>(), jn[2].get<std::string>()});
  for (const auto& cl : j.at("claims")) c.claims.emplace_back(cl[0].get<std::string>(), cl[1].get<std::string>());
  return c;
}

std::string fiber_string(const IntVector& mult) {
  std::vector<std::string> xs;
  for (const auto& m : mult) xs.push_back(m.str());
  return join(xs, ",");
}

std::string chi_field(const EulerNumbers& e, const std::string& f) {
  if (f == "surface") return e.surface.str();
  if (f == "boundary") return e.boundary.str();
  if (f == "exceptional") return e.exceptional.str();
  if (f == "open") return e.open.str();
  throw DomainError("unknown euler field " + f);
}

std::vector<BigInt> quotient_orders(const Scenario& s) {
  DualGraph e = s.exceptional_graph();
  std::vector<BigInt> orders;
  for (const auto& comp : e.components()) orders.push_back(discriminant_at(e, comp));
  return orders;
}

Rational sharp_square(const Scenario& s) {
  RatVector k = k_plus_sharp_class(s.lattice, s.boundary);
  return s.lattice.pair(k, k);
}

using Eval = std::function<std::string(const json&, Scenario&)>;

const std::map<std::string, Eval>& evaluators() {
  static const std::map<std::string, Eval> table{
      {"rank", [](const json&, Scenario& s) { return std::to_string(s.lattice.rank()); }},
      {"shape", [](const json& c, Scenario& s) { return describe_shape(s.graph(c.at("of"))); }},
      {"discriminant", [](const json& c, Scenario& s) { return discriminant(s.graph(c.at("of"))).str(); }},
      {"discriminant_sign", [](const json& c, Scenario& s) { return sign_word(discriminant(s.graph(c.at("of")))); }},
      {"nondegenerate", [](const json& c, Scenario& s) { return yes_no(discriminant(s.graph(c.at("of"))) != 0); }},
      {"k_plus_sharp", [](const json&, Scenario& s) { return format_class(k_plus_sharp_class(s.lattice, s.boundary)); }},
      {"euler",
       [](const json& c, Scenario& s) {
         return chi_field(euler_numbers(s.lattice, s.boundary, s.exceptional), c.at("field"));
       }},
      {"exceptional_count",
       [](const json&, Scenario& s) {
         BigInt b2 = s.lattice.pair(s.center, s.center);
         BigInt rhs = 8 - b2 - BigInt(s.boundary.size());
         return "#E=" + std::to_string(s.exceptional.size()) + " 8-B^2-#D=" + rhs.str();
       }},
      {"canonical_square",
       [](const json&, Scenario& s) { return s.lattice.pair(s.lattice.canonical(), s.lattice.canonical()).str(); }},
      {"noether",
       [](const json&, Scenario& s) {
         BigInt k2 = s.lattice.pair(s.lattice.canonical(), s.lattice.canonical());
         return (k2 + 2 + BigInt(s.boundary.size()) + BigInt(s.exceptional.size())).str();
       }},
      {"plumbing_homology",
       [](const json& c, Scenario& s) { return torsion_of_cokernel(s.graph(c.at("of")).intersection_matrix()).to_string(); }},
      {"complement_homology_order",
       [](const json& c, Scenario& s) {
         std::vector<std::string> names = c.value("of", std::string("boundary")) == "union" ? s.union_names() : s.boundary;
         return h1_order(s.lattice, names).order().str();
       }},
      {"kobayashi",
       [](const json&, Scenario& s) {
         EulerNumbers e = euler_numbers(s.lattice, s.boundary, s.exceptional);
         KobayashiResult k = kobayashi_check(e.open, quotient_orders(s), sharp_square(s));
         return std::string(k.holds ? "holds" : "fails") + " slack=" + to_string(k.slack);
       }},
      {"boundary_type",
       [](const json&, Scenario& s) {
         BoundaryType t = classify_boundary(s.boundary_graph());
         if (t.tag != BoundaryType::Tag::TypeY) return t.to_string();
         std::array<BigInt, 3> tr = t.triple;
         std::sort(tr.begin(), tr.end());
         return "Y{" + tr[0].str() + "," + tr[1].str() + "," + tr[2].str() + "}";
       }},
      {"fiber_class",
       [](const json& c, Scenario& s) {
         IntVector f = s.lattice.class_of_expression(c.at("fiber").get<std::string>());
         IntVector k = s.lattice.canonical();
         return "F^2=" + s.lattice.pair(f, f).str() + " F.K=" + s.lattice.pair(f, k).str();
       }},
      {"fiber",
       [](const json& c, Scenario& s) {
         std::vector<std::string> comps = strings_of(c.at("components"));
         FiberGraph fg = fiber_multiplicities(extract_boundary_graph(s.lattice, comps));
         IntVector mult;
         IntVector sum = s.lattice.zero();
         for (const auto& n : comps) {
           BigInt m = fg.multiplicity(n);
           mult.push_back(m);
           const IntVector& v = s.lattice.class_of(n);
           for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += m * v[i];
         }
         std::string out = fiber_string(mult);
         if (c.contains("fiber") && sum != s.lattice.class_of_expression(c["fiber"].get<std::string>()))
           out += " (not linearly equivalent to the fiber)";
         return out;
       }},
      {"solve_class",
       [](const json& c, Scenario& s) {
         std::vector<ClassConstraint> cons;
         for (const auto& k : c.at("constraints"))
           cons.push_back({s.lattice.class_of_expression(k[0].get<std::string>()), BigInt(k[1].get<long long>())});
         auto sols = solve_curve_class(s.lattice, cons, c.at("self").get<long long>());
         if (sols.empty()) return std::string("none");
         if (sols.size() > 1) {
           std::vector<std::string> xs;
           for (const auto& v : sols) xs.push_back(format_class(v));
           return std::to_string(sols.size()) + " solutions: " + join(xs, "; ");
         }
         if (c.contains("store")) s.lattice.add_class(c["store"].get<std::string>(), sols.front());
         return format_class(sols.front());
       }},
      {"pairings",
       [](const json& c, Scenario& s) {
         std::vector<std::string> xs;
         for (const auto& p : c.at("pairs"))
           xs.push_back(s.lattice
                            .pair(s.lattice.class_of_expression(p[0].get<std::string>()),
                                  s.lattice.class_of_expression(p[1].get<std::string>()))
                            .str());
         return join(xs, ",");
       }},
      {"orthogonal_minus_one",
       [](const json& c, Scenario& s) {
         std::vector<std::string> names = strings_of(c.at("names"));
         IntVector k = s.lattice.canonical();
         for (std::size_t i = 0; i < names.size(); ++i) {
           const IntVector& a = s.lattice.class_of(names[i]);
           if (s.lattice.pair(a, a) != -1 || s.lattice.pair(a, k) != -1) return "false: " + names[i] + " is not a (-1)-class";
           for (std::size_t j = i + 1; j < names.size(); ++j)
             if (s.lattice.pair(a, s.lattice.class_of(names[j])) != 0) return "false: " + names[i] + "." + names[j] + " != 0";
         }
         return std::string("true");
       }},
      {"ruling",
       [](const json& c, Scenario& s) {
         std::string mode = c.at("boundary").get<std::string>();
         std::vector<std::string> bnd;
         if (mode == "D")
           bnd = s.boundary;
         else if (mode == "D+E")
           bnd = s.union_names();
         else
           throw DomainError("ruling boundary must be D or D+E");
         IntVector f = s.lattice.class_of_expression(c.at("fiber").get<std::string>());
         RulingDecomposition r = ruling_decompose(s.lattice, f, s.lattice.names(), bnd);
         const RulingBookkeeping& b = r.bookkeeping;
         std::ostringstream os;
         os << "h=" << b.h << " nu=" << b.nu << " Sigma=" << b.sigma_excess << " b2=" << b.b2_surface
            << " b2D=" << b.b2_boundary << " fujita=" << (fujita_check(b) ? "holds" : "fails");
         if (!r.all_complete) os << " (incomplete fibers)";
         return os.str();
       }},
      {"conic_family",
       [](const json&, Scenario&) {
         ConicFamilySolution sol = conic_family_solve();
         return "u=" + to_string(sol.u) + " v=" + to_string(sol.v);
       }},
      {"incident",
       [](const json& c, Scenario& s) {
         return yes_no(incident(s.point(c.at("point").get<std::string>()), s.curve(c.at("curve").get<std::string>())));
       }},
      {"collinear",
       [](const json& c, Scenario& s) {
         std::vector<std::string> p = strings_of(c.at("points"));
         if (p.size() != 3) throw DomainError("collinear takes three points");
         return yes_no(collinear(s.point(p[0]), s.point(p[1]), s.point(p[2])));
       }},
      {"multiplicity",
       [](const json& c, Scenario& s) {
         std::vector<std::string> cv = strings_of(c.at("curves"));
         return std::to_string(intersection_multiplicity(s.curve(cv.at(0)), s.curve(cv.at(1)), s.point(c.at("point"))));
       }},
      {"bezout",
       [](const json& c, Scenario& s) {
         std::vector<std::string> cv = strings_of(c.at("curves"));
         std::vector<Point> pts;
         for (const auto& p : strings_of(c.at("points"))) pts.push_back(s.point(p));
         BezoutTally t = bezout_tally(s.curve(cv.at(0)), s.curve(cv.at(1)), pts);
         return std::to_string(t.total) + "/" + std::to_string(t.degree) + (t.exhausted ? " exhausted" : " not exhausted");
       }},
      {"configuration_claims",
       [](const json&, Scenario& s) {
         if (!s.config) throw DomainError("scenario has no configuration");
         auto res = evaluate_claims(*s.config);
         std::size_t ok = static_cast<std::size_t>(std::count_if(res.begin(), res.end(), [](const ClaimResult& r) { return r.holds; }));
         std::string out = std::to_string(ok) + "/" + std::to_string(res.size());
         for (const auto& r : res)
           if (!r.holds) out += " " + r.point + "!on" + r.line;
         return out;
       }},
      {"hesse",
       [](const json&, Scenario& s) {
         if (!s.config) throw DomainError("scenario has no configuration");
         HesseReport h = dual_hesse_check(*s.config);
         std::set<int> pd, ld;
         for (const auto& [n, d] : h.point_degrees) pd.insert(d);
         for (const auto& [n, d] : h.line_degrees) ld.insert(d);
         auto degs = [](const std::set<int>& xs) {
           std::vector<std::string> v;
           for (int x : xs) v.push_back(std::to_string(x));
           return join(v, "|");
         };
         std::ostringstream os;
         os << "points=" << h.point_degrees.size() << "x" << degs(pd) << " lines=" << h.line_degrees.size() << "x"
            << degs(ld) << " incidences=" << h.incidences << (h.distinct ? "" : " (coincident elements)");
         return os.str();
       }},
      {"transform_fixes",
       [](const json& c, Scenario& s) {
         return yes_no(fixes(s.transform(c.at("transform")), s.point(c.at("point"))));
       }},
      {"transform_maps",
       [](const json& c, Scenario& s) {
         return yes_no(maps_to(s.transform(c.at("transform")), s.point(c.at("from")), s.point(c.at("to"))));
       }},
      {"transform_maps_curve",
       [](const json& c, Scenario& s) {
         return yes_no(same_curve(apply_to_curve(s.transform(c.at("transform")), s.curve(c.at("from"))), s.curve(c.at("to"))));
       }},
      {"transform_order",
       [](const json& c, Scenario& s) { return std::to_string(projective_order(s.transform(c.at("transform")))); }},
      {"transform_permutes_points",
       [](const json& c, Scenario& s) {
         if (!s.config) throw DomainError("scenario has no configuration");
         std::vector<Point> pts;
         for (const auto& [n, p] : s.config->points) pts.push_back(p);
         return yes_no(permutes(s.transform(c.at("transform")), pts));
       }},
      {"transform_permutes_lines",
       [](const json& c, Scenario& s) {
         if (!s.config) throw DomainError("scenario has no configuration");
         std::vector<Line> ls;
         for (const auto& n : s.config->line_names()) ls.push_back(s.config->line(n));
         return yes_no(permutes_lines(s.transform(c.at("transform")), ls));
       }},
  };
  return table;
}

Scenario load_scenario(const json& j, std::string_view arrangement_text) {
  Scenario s;
  s.lattice = run_program(parse_program(arrangement_text));
  s.boundary = strings_of(j.at("boundary"));
  s.exceptional = strings_of(j.at("exceptional"));
  s.center = j.value("center", std::string("B"));
  if (j.contains("points"))
    for (const auto& [n, p] : j["points"].items()) s.points.emplace(n, parse_point(p.get<std::string>()));
  if (j.contains("curves"))
    for (const auto& [n, eq] : j["curves"].items()) s.curves.emplace(n, parse_curve(eq.get<std::string>()));
  if (j.contains("transforms"))
    for (const auto& [n, m] : j["transforms"].items()) s.transforms.emplace(n, parse_matrix(m.get<std::string>()));
  if (j.contains("configuration")) s.config = configuration_of(j["configuration"]);
  return s;
}

// --- case table ---------------------------------------------------------------------------------

// "T1+3B+2T3_2" -> [(T1,1),(B,3),(T3_2,2)]
std::vector<std::pair<std::string, BigInt>> parse_terms(const std::string& text) {
  std::vector<std::pair<std::string, BigInt>> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '+') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    BigInt coef = j > i ? BigInt(text.substr(i, j - i)) : BigInt(1);
    std::size_t k = j;
    while (k < text.size() && text[k] != '+') ++k;
    std::string name = text.substr(j, k - j);
    if (name.empty()) throw ParseError(0, "bad divisor term in '" + text + "'");
    out.emplace_back(name, coef);
    i = k;
  }
  return out;
}

std::string format_terms(const std::vector<std::pair<std::string, BigInt>>& terms) {
  std::string out;
  for (const auto& [n, c] : terms) {
    if (!out.empty()) out += "+";
    if (c != 1) out += c.str();
    out += n;
  }
  return out.empty() ? "0" : out;
}

std::string sorted_sum(std::vector<std::string> names) {
  if (names.empty()) return "0";
  std::sort(names.begin(), names.end());
  return join(names, "+");
}

std::string type_string(const BoundaryType& t) {
  if (t.tag != BoundaryType::Tag::TypeY) return t.to_string();
  std::array<BigInt, 3> tr = t.triple;
  std::sort(tr.begin(), tr.end());
  return "Y{" + tr[0].str() + "," + tr[1].str() + "," + tr[2].str() + "}";
}

const json& field(const json& entry, const char* key) {
  if (!entry.is_object() || !entry.contains(key)) throw ParseError(0, std::string("case entry lacks '") + key + "'");
  return entry[key];
}

void run_case(const json& entry, Report& report) {
  const std::string id = field(entry, "id").get<std::string>();
  const std::string prov = field(entry, "provenance").get<std::string>();
  const std::string anchor = field(entry, "anchor").get<std::string>();
  if (!provenance_words().count(prov) || anchor.empty()) throw ParseError(0, "case " + id + ": provenance/anchor");

  auto add = [&](const std::string& what, const std::string& expected, std::function<std::string()> f) {
    CheckResult r;
    r.name = id + " " + what;
    r.expected = expected;
    try {
      r.actual = f();
    } catch (const std::exception& e) {
      r.actual = std::string("error: ") + e.what();
    }
    r.pass = r.actual == r.expected;
    r.ref = anchor;
    r.provenance = prov;
    report.checks.push_back(std::move(r));
  };

  std::vector<std::vector<Weight>> twigs;
  for (const auto& t : field(entry, "twigs")) twigs.push_back(t.get<std::vector<Weight>>());
  const DualGraph g = fork_graph(field(entry, "center").get<Weight>(), twigs);

  add("d(D)", field(entry, "d").get<std::string>(), [&] {
    BigInt d = discriminant(g);
    return std::string(d == 0 ? "zero" : "nonzero");
  });
  add("type", field(entry, "type").get<std::string>(), [&] { return type_string(classify_boundary(g)); });

  if (!entry.contains("quadruple")) return;
  const json& q = entry["quadruple"];
  const std::string fexpr = q.at("fiber").get<std::string>();
  auto terms = parse_terms(fexpr);

  std::vector<std::size_t> support;
  for (const auto& [n, c] : terms) support.push_back(g.index_of(n));
  const DualGraph fg = g.induced(support);

  add("F_inf valid fiber", "true", [&] { return yes_no(is_valid_fiber(fg).valid); });
  add("F_inf multiplicities", fexpr, [&] {
    FiberGraph f = fiber_multiplicities(fg);
    std::vector<std::pair<std::string, BigInt>> got;
    for (const auto& [n, c] : terms) got.emplace_back(n, f.multiplicity(n));
    return format_terms(got);
  });

  // F . D_j for D_j off the support; D_h = those with positive degree.
  std::set<std::size_t> in_support(support.begin(), support.end());
  BigInt fd = 0;
  std::vector<std::string> horizontal, vertical;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (in_support.count(v)) continue;
    BigInt deg = 0;
    for (const auto& [n, c] : terms)
      if (g.adjacent(v, g.index_of(n))) deg += c;
    fd += deg;
    (deg > 0 ? horizontal : vertical).push_back(g.id(v));
  }
  add("F.D", std::to_string(q.at("FD").get<long long>()), [&] { return fd.str(); });
  add("Sigma=#D_h-1", std::to_string(q.at("Sigma").get<long long>()),
      [&] { return std::to_string(static_cast<long long>(horizontal.size()) - 1); });
  add("D_v", sorted_sum(strings_of(q.at("Dv"))), [&] { return sorted_sum(vertical); });
}

}  // namespace

DualGraph fork_graph(Weight center, const std::vector<std::vector<Weight>>& twigs) {
  DualGraph g;
  g.add_vertex("B", center);
  for (std::size_t i = 0; i < twigs.size(); ++i) {
    const auto& t = twigs[i];
    if (t.empty()) throw DomainError("empty twig");
    std::string base = "T" + std::to_string(i + 1);
    std::string prev;
    for (std::size_t j = 0; j < t.size(); ++j) {
      std::string id = t.size() == 1 ? base : base + "_" + std::to_string(j + 1);
      g.add_vertex(id, -t[j]);
      if (!prev.empty()) g.add_edge(prev, id);
      prev = id;
    }
    g.add_edge(prev, "B");
  }
  return g;
}

std::string describe_shape(const DualGraph& g) {
  if (g.empty()) return "empty";
  if (g.is_chain()) {
    std::size_t start = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) <= 1) {
        start = v;
        break;
      }
    std::vector<std::size_t> order{start};
    std::size_t prev = start;
    while (order.size() < g.vertex_count()) {
      for (std::size_t n : g.neighbors(order.back()))
        if (n != prev || order.size() == 1) {
          if (std::find(order.begin(), order.end(), n) != order.end()) continue;
          prev = order.back();
          order.push_back(n);
          break;
        }
    }
    Chain c = chain_of(g, order);
    return "chain " + std::min(c.bracket(), c.reversed().bracket());
  }
  if (!g.is_tree()) return g.is_forest() ? "forest" : "cyclic";
  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= 3) branch.push_back(v);
  if (branch.size() != 1) return "tree";
  std::vector<std::string> brackets;
  for (const auto& t : maximal_twigs(g)) brackets.push_back(t.bracket());
  std::sort(brackets.begin(), brackets.end(), [](const std::string& x, const std::string& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  std::size_t b = branch.front();
  return "fork " + g.id(b) + "(" + std::to_string(g.weight(b)) + ") " + join(brackets, " ");
}

namespace {

// malformed fixture structure (wrong types, missing keys) is a parse error
template <class F>
Report structural(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("fixture: ") + e.what());
  }
}

Report scenario_impl(std::string_view fixture_json, std::string_view arrangement_text) {
  json j = parse_json(fixture_json);
  Report report;
  report.title = j.at("scenario").get<std::string>();
  for (const auto& c : j.at("checks")) require_fields(c);

  std::optional<Scenario> s;
  std::string load_error;
  try {
    s = load_scenario(j, arrangement_text);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    load_error = e.what();
  }

  for (const auto& c : j.at("checks")) {
    if (!s) {
      report.checks.push_back(make_result(c, "error: " + load_error));
      continue;
    }
    std::string kind = c.at("kind").get<std::string>();
    auto it = evaluators().find(kind);
    if (it == evaluators().end()) throw ParseError(0, "unknown check kind '" + kind + "'");
    std::string actual;
    try {
      actual = it->second(c, *s);
    } catch (const std::exception& e) {
      actual = std::string("error: ") + e.what();
    }
    report.checks.push_back(make_result(c, std::move(actual)));
  }
  return report;
}

Report case_table_impl(std::string_view cases_json) {
  json j = parse_json(cases_json);
  Report report;
  report.title = "cases";
  for (const auto& entry : j.at("cases")) run_case(entry, report);
  return report;
}

}  // namespace

Report run_scenario_text(std::string_view fixture_json, std::string_view arrangement_text) {
  return structural([&] { return scenario_impl(fixture_json, arrangement_text); });
}

Report run_scenario(const std::string& name, const std::string& fixture_dir) {
  std::string text = read_file(fixture_dir + "/" + name + ".json");
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("arrangement") || !j["arrangement"].is_string())
    throw ParseError(0, name + ".json: missing arrangement");
  std::string arr = read_file(fixture_dir + "/" + j["arrangement"].get<std::string>());
  return run_scenario_text(text, arr);
}

Report run_case_table_text(std::string_view cases_json) {
  return structural([&] { return case_table_impl(cases_json); });
}

Report run_case_table(const std::string& fixture_dir) { return run_case_table_text(read_file(fixture_dir + "/cases.json")); }

Report run_all(const std::string& fixture_dir) {
  Report all;
  all.title = "all";
  all.append(run_scenario("y244", fixture_dir));
  all.append(run_scenario("y333", fixture_dir));
  all.append(run_case_table(fixture_dir));
  return all;
}

}  // namespace snc
