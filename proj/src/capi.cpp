#include "snc/snc.h"

#include "snc/birational.hpp"
#include "snc/divisor.hpp"
#include "snc/graph.hpp"
#include "snc/lattice.hpp"
#include "snc/verify.hpp"

#include "json.hpp"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

struct snc_graph {
  snc::DualGraph g;
};

struct snc_surface {
  snc::SurfaceLattice l;
};

struct snc_report {
  std::vector<snc::Report> parts;
};

namespace {

thread_local std::string last_error;

using json = nlohmann::json;

template <class F>
snc_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return SNC_OK;
  } catch (const snc::ParseError& e) {
    last_error = e.what();
    return SNC_PARSE_ERROR;
  } catch (const snc::SingularMatrixError& e) {
    last_error = e.what();
    return SNC_SINGULAR_MATRIX;
  } catch (const snc::IoError& e) {
    last_error = e.what();
    return SNC_IO_ERROR;
  } catch (const snc::DomainError& e) {
    last_error = e.what();
    return SNC_DOMAIN_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SNC_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown error";
    return SNC_INTERNAL_ERROR;
  }
}

snc_status bad_argument(const char* what) {
  last_error = what;
  return SNC_INVALID_ARGUMENT;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::vector<std::string> names_of(const char* const* names, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!names[i]) throw snc::DomainError("null name");
    out.emplace_back(names[i]);
  }
  return out;
}

snc::BarkSupport support_of(snc_bark_support k) {
  switch (k) {
    case SNC_BARK_AUTO:
      return snc::BarkSupport::Auto;
    case SNC_BARK_WHOLE_COMPONENT:
      return snc::BarkSupport::WholeComponent;
    case SNC_BARK_TWIGS:
      return snc::BarkSupport::Twigs;
  }
  throw snc::DomainError("unknown bark support");
}

json divisor_json(const snc::DualGraph& g, const snc::QDivisor& d) {
  json j = json::object();
  for (const auto& v : g.vertices()) j[v.id] = snc::to_string(d.coefficient(v.id));
  return j;
}

}  // namespace

extern "C" {

const char* snc_last_error(void) { return last_error.c_str(); }

const char* snc_status_name(snc_status s) {
  switch (s) {
    case SNC_OK:
      return "ok";
    case SNC_PARSE_ERROR:
      return "parse error";
    case SNC_DOMAIN_ERROR:
      return "domain error";
    case SNC_SINGULAR_MATRIX:
      return "singular matrix";
    case SNC_IO_ERROR:
      return "io error";
    case SNC_INVALID_ARGUMENT:
      return "invalid argument";
    case SNC_INTERNAL_ERROR:
      return "internal error";
  }
  return "unknown status";
}

const char* snc_version(void) { return "0.1.0"; }

void snc_string_free(char* s) { std::free(s); }

snc_status snc_graph_from_file(const char* path, snc_graph** out) {
  if (!path || !out) return bad_argument("null argument");
  return guarded([&] { *out = new snc_graph{snc::load_graph_file(path)}; });
}

snc_status snc_graph_from_text(const char* text, snc_graph** out) {
  if (!text || !out) return bad_argument("null argument");
  return guarded([&] { *out = new snc_graph{snc::parse_graph(text)}; });
}

void snc_graph_destroy(snc_graph* g) { delete g; }

snc_status snc_graph_vertex_count(const snc_graph* g, size_t* out) {
  if (!g || !out) return bad_argument("null argument");
  return guarded([&] { *out = g->g.vertex_count(); });
}

snc_status snc_graph_serialize(const snc_graph* g, char** out) {
  if (!g || !out) return bad_argument("null argument");
  return guarded([&] { *out = dup(snc::serialize_graph(g->g)); });
}

snc_status snc_graph_discriminant(const snc_graph* g, const char* const* support, size_t support_len, char** out) {
  if (!g || !out || (!support && support_len)) return bad_argument("null argument");
  return guarded([&] {
    snc::BigInt d = support ? snc::discriminant(g->g, names_of(support, support_len)) : snc::discriminant(g->g);
    *out = dup(d.str());
  });
}

snc_status snc_graph_bark(const snc_graph* g, snc_bark_support kind, char** out) {
  if (!g || !out) return bad_argument("null argument");
  return guarded([&] {
    snc::QDivisor bk = snc::bark(g->g, support_of(kind));
    snc::QDivisor sh = snc::sharp(g->g, support_of(kind));
    snc::RatVector res = snc::bark_residuals(g->g, bk);
    json j;
    j["bark"] = divisor_json(g->g, bk);
    j["sharp"] = divisor_json(g->g, sh);
    json r = json::object();
    for (std::size_t i = 0; i < res.size(); ++i) r[g->g.id(i)] = snc::to_string(res[i]);
    j["residuals"] = r;
    *out = dup(j.dump());
  });
}

snc_status snc_graph_classify(const snc_graph* g, char** out) {
  if (!g || !out) return bad_argument("null argument");
  return guarded([&] { *out = dup(snc::classify_boundary(g->g).to_string()); });
}

snc_status snc_graph_fiber_check(const snc_graph* g, int* valid, char** out) {
  if (!g || !valid || !out) return bad_argument("null argument");
  return guarded([&] {
    snc::FiberSearch fs = snc::is_valid_fiber(g->g);
    json j;
    j["valid"] = fs.valid;
    j["trace"] = json::array();
    for (const auto& st : fs.trace) j["trace"].push_back({{"vertex", st.vertex}, {"neighbors", st.neighbors}});
    json m = json::object();
    if (fs.valid) {
      snc::FiberGraph f = snc::fiber_multiplicities(g->g);
      for (const auto& v : g->g.vertices()) m[v.id] = f.multiplicity(v.id).str();
    }
    j["multiplicities"] = m;
    *valid = fs.valid ? 1 : 0;
    *out = dup(j.dump());
  });
}

snc_status snc_graph_mumford(const snc_graph* g, char** out) {
  if (!g || !out) return bad_argument("null argument");
  return guarded([&] {
    snc::SmithForm sf = snc::smith_normal_form(g->g.intersection_matrix());
    json j;
    j["invariant_factors"] = json::array();
    long long free_rank = 0;
    for (const auto& x : sf.diagonal()) {
      if (x == 0)
        ++free_rank;
      else if (x > 1)
        j["invariant_factors"].push_back(x.str());
    }
    j["free_rank"] = free_rank;
    j["torsion"] = snc::torsion_of_cokernel(g->g.intersection_matrix()).to_string();
    *out = dup(j.dump());
  });
}

snc_status snc_graph_dot(const snc_graph* g, char** out) {
  if (!g || !out) return bad_argument("null argument");
  return guarded([&] { *out = dup(snc::emit_dot(g->g)); });
}

snc_status snc_surface_from_file(const char* path, snc_surface** out) {
  if (!path || !out) return bad_argument("null argument");
  return guarded([&] { *out = new snc_surface{snc::run_program(snc::load_program_file(path))}; });
}

snc_status snc_surface_from_text(const char* text, snc_surface** out) {
  if (!text || !out) return bad_argument("null argument");
  return guarded([&] { *out = new snc_surface{snc::run_program(snc::parse_program(text))}; });
}

void snc_surface_destroy(snc_surface* s) { delete s; }

snc_status snc_surface_summary(const snc_surface* s, char** out) {
  if (!s || !out) return bad_argument("null argument");
  return guarded([&] {
    const snc::SurfaceLattice& l = s->l;
    snc::IntVector k = l.canonical();
    json j;
    j["rank"] = l.rank();
    j["canonical"] = snc::format_class(k);
    j["canonical_square"] = l.pair(k, k).str();
    j["classes"] = json::array();
    for (const auto& n : l.names()) {
      const snc::IntVector& v = l.class_of(n);
      j["classes"].push_back({{"name", n}, {"class", snc::format_class(v)}, {"self", l.pair(v, v).str()}});
    }
    *out = dup(j.dump());
  });
}

snc_status snc_surface_boundary_graph(const snc_surface* s, const char* const* names, size_t n, snc_graph** out) {
  if (!s || !out || (!names && n)) return bad_argument("null argument");
  return guarded([&] { *out = new snc_graph{snc::extract_boundary_graph(s->l, names_of(names, n))}; });
}

snc_status snc_verify(const char* target, const char* fixture_dir, snc_report** out) {
  if (!target || !fixture_dir || !out) return bad_argument("null argument");
  std::string t(target);
  if (t != "y244" && t != "y333" && t != "cases" && t != "all") return bad_argument("unknown verify target");
  return guarded([&] {
    auto r = new snc_report;
    try {
      if (t == "y244" || t == "all") r->parts.push_back(snc::run_scenario("y244", fixture_dir));
      if (t == "y333" || t == "all") r->parts.push_back(snc::run_scenario("y333", fixture_dir));
      if (t == "cases" || t == "all") r->parts.push_back(snc::run_case_table(fixture_dir));
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
  });
}

void snc_report_destroy(snc_report* r) { delete r; }

snc_status snc_report_counts(const snc_report* r, size_t* passed, size_t* total) {
  if (!r || !passed || !total) return bad_argument("null argument");
  return guarded([&] {
    *passed = 0;
    *total = 0;
    for (const auto& p : r->parts) {
      *total += p.checks.size();
      *passed += p.checks.size() - p.failures();
    }
  });
}

snc_status snc_report_text(const snc_report* r, char** out) {
  if (!r || !out) return bad_argument("null argument");
  return guarded([&] {
    std::string s;
    for (const auto& p : r->parts) s += p.to_text();
    *out = dup(s);
  });
}

snc_status snc_report_json(const snc_report* r, char** out) {
  if (!r || !out) return bad_argument("null argument");
  return guarded([&] {
    json j = json::array();
    for (const auto& p : r->parts) j.push_back(json::parse(p.to_json()));
    *out = dup(j.dump(2) + "\n");
  });
}

}  // extern "C"
