#include "mld/report_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mld/errors.hpp"

namespace mld {

namespace {

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": malformed JSON: " + e.what());
  }
}

const Json& require_key(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t size_from_json(const Json& j, const std::string& what) {
  const Integer v = integer_from_json(j, what);
  if (v < 0 || !fits_int64(v)) throw InputError(what + " must be a nonnegative integer");
  return static_cast<std::size_t>(to_int64(v));
}

Json string_list(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

Json vectors_json(const std::vector<LatticeVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vector_json(v));
  return a;
}

Json u64_list(const std::vector<std::uint64_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

std::string var_name(std::size_t j, const std::vector<std::string>& names) {
  return j < names.size() ? names[j] : "x" + std::to_string(j + 1);
}

Json face_json(const FaceSpec& f) {
  if (const auto* fn = std::get_if<FunctionalFace>(&f)) return Json{{"functional", vector_json(fn->functional)}};
  Json idx = Json::array();
  for (auto i : std::get<RaySubsetFace>(f).indices) idx.push_back(i);
  return Json{{"rays", idx}};
}

}  // namespace

Json integer_json(const Integer& v) {
  if (fits_int64(v)) return Json(to_int64(v));
  return Json(v.get_str());
}

Integer integer_from_json(const Json& j, const std::string& what) {
  if (j.is_number_unsigned()) return Integer(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer v;
    const std::string s = j.get<std::string>();
    if (s.empty() || v.set_str(s, 10) != 0) throw InputError(what + ": \"" + s + "\" is not an integer");
    return v;
  }
  if (j.is_number_float()) {
    throw InputError(what + ": " + j.dump() + " is not an integer (write large values as strings)");
  }
  throw InputError(what + ": expected an integer, got " + j.dump());
}

Json vector_json(const LatticeVector& v) {
  Json a = Json::array();
  for (const auto& x : v.entries()) a.push_back(integer_json(x));
  return a;
}

LatticeVector vector_from_json(const Json& j, std::size_t rank, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected an array");
  if (j.size() != rank) {
    throw InputError(what + ": expected " + std::to_string(rank) + " entries, got " + std::to_string(j.size()));
  }
  std::vector<Integer> e;
  for (const auto& x : j) e.push_back(integer_from_json(x, what));
  return LatticeVector(std::move(e));
}

ConeInput parse_cone_json(const Json& j) {
  const std::size_t n = size_from_json(require_key(j, "lattice_rank"), "lattice_rank");
  if (n == 0) throw InputError("lattice_rank must be positive");
  const Json& rays = require_key(j, "rays");
  if (!rays.is_array()) throw InputError("rays: expected an array of vectors");
  std::vector<LatticeVector> gens;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    gens.push_back(vector_from_json(rays[i], n, "ray " + std::to_string(i)));
  }
  ConeInput out{Cone::from_generators(n, gens), std::nullopt};
  auto it = j.find("face");
  if (it != j.end() && !it->is_null()) {
    if (it->contains("functional")) {
      out.face = FunctionalFace{vector_from_json((*it)["functional"], n, "face functional")};
    } else if (it->contains("rays")) {
      RaySubsetFace f;
      for (const auto& x : (*it)["rays"]) {
        const std::size_t i = size_from_json(x, "face ray index");
        if (i >= gens.size()) throw InputError("face ray index " + std::to_string(i) + " out of range");
        const auto& rs = out.cone.rays();
        auto pos = std::find(rs.begin(), rs.end(), gens[i].primitive());
        if (pos == rs.end()) throw InputError("face ray " + std::to_string(i) + " is not an extreme ray");
        f.indices.push_back(static_cast<std::size_t>(pos - rs.begin()));
      }
      std::sort(f.indices.begin(), f.indices.end());
      f.indices.erase(std::unique(f.indices.begin(), f.indices.end()), f.indices.end());
      out.face = f;
    } else {
      throw InputError("face: expected \"functional\" or \"rays\"");
    }
  }
  return out;
}

ConeInput parse_cone_file(const std::filesystem::path& path) { return parse_cone_json(read_json_file(path)); }

Support parse_support_json(const Json& j) {
  const std::size_t k = size_from_json(require_key(j, "vars"), "vars");
  const Json& sup = require_key(j, "support");
  if (!sup.is_array()) throw InputError("support: expected an array of exponent vectors");
  std::vector<std::vector<Integer>> raw;
  for (std::size_t i = 0; i < sup.size(); ++i) {
    raw.push_back(vector_from_json(sup[i], k, "monomial " + std::to_string(i)).entries());
  }
  return require_integral(raw);
}

Support parse_support_file(const std::filesystem::path& path) {
  return parse_support_json(read_json_file(path));
}

AlphaTuple parse_alpha(const std::string& text) {
  std::vector<Integer> orders;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer v;
    if (item.empty() || v.set_str(item, 10) != 0) throw InputError("alpha: \"" + item + "\" is not an integer");
    orders.push_back(v);
  }
  return AlphaTuple(std::move(orders));
}

Json MldReport::to_json() const {
  Json j;
  j["variety_kind"] = variety_kind;
  j[lower_bound_key ? "lambda_lower_bound" : "lambda"] = integer_json(lambda);
  j["mather_mld"] = integer_json(mather_mld);
  j["status"] = status;
  j["witness"] = witness;
  j["assumptions"] = string_list(assumptions);
  j["diagnostics"] = diagnostics;
  if (timings) j["timings"] = *timings;
  return j;
}

MldReport MldReport::from_json(const Json& j) {
  MldReport r;
  r.variety_kind = require_key(j, "variety_kind").get<std::string>();
  if (r.variety_kind != "toric" && r.variety_kind != "hypersurface") {
    throw InputError("variety_kind must be toric or hypersurface");
  }
  r.lower_bound_key = j.contains("lambda_lower_bound");
  r.lambda = integer_from_json(require_key(j, r.lower_bound_key ? "lambda_lower_bound" : "lambda"), "lambda");
  r.mather_mld = integer_from_json(require_key(j, "mather_mld"), "mather_mld");
  r.status = require_key(j, "status").get<std::string>();
  r.witness = require_key(j, "witness");
  for (const auto& a : require_key(j, "assumptions")) r.assumptions.push_back(a.get<std::string>());
  r.diagnostics = require_key(j, "diagnostics");
  if (j.contains("timings")) r.timings = j["timings"];
  return r;
}

bool MldReport::operator==(const MldReport& o) const { return to_json() == o.to_json(); }

MldReport make_report(const ToricMldReport& r) {
  MldReport out;
  out.variety_kind = "toric";
  out.lambda = r.lambda;
  out.mather_mld = r.mather_mld;
  out.status = "EXACT";
  if (r.witness) {
    out.witness = Json{{"point", vector_json(r.witness->point)},
                       {"phi", integer_json(r.witness->value)},
                       {"chosen", vectors_json(r.witness->chosen)}};
  }
  Json d;
  d["fast_path"] = to_string(r.fast_path);
  d["search_bound_used"] = integer_json(r.search_bound_used);
  d["ambient_dimension"] = r.ambient_dimension;
  d["reduced_dimension"] = r.reduced_dimension;
  d["torus_factor_rank"] = r.torus_factor_rank;
  d["face"] = r.face_reduced_from ? face_json(*r.face_reduced_from) : Json();
  d["face_rays"] = r.face_rays;
  d["hilbert_basis_size"] = r.hilbert_basis_size;
  d["subsets_examined"] = r.subsets_examined;
  out.diagnostics = d;
  return out;
}

MldReport make_report(const HypersurfaceMldReport& r, const std::vector<std::string>& names) {
  MldReport out;
  out.variety_kind = "hypersurface";
  out.lower_bound_key = true;
  out.lambda = r.lambda_lower_bound;
  out.mather_mld = r.mather_mld_lower_bound;
  out.status = to_string(r.status);
  out.witness = Json{{"alpha", vector_json(r.witness_alpha.as_vector())}};
  out.assumptions = r.assumptions;

  // Names of the surviving variables after unused ones were dropped.
  std::vector<std::string> kept;
  for (std::size_t j = 0, d = 0; j < r.original_num_vars; ++j) {
    if (d < r.dropped_variables.size() && r.dropped_variables[d] == j) {
      ++d;
    } else {
      kept.push_back(var_name(j, names));
    }
  }
  const auto& c = r.certificate;
  Json cert;
  cert["verdict"] = to_string(c.verdict);
  cert["reason"] = c.reason;
  cert["j0"] = var_name(c.j0, kept);
  cert["n0"] = integer_json(c.n0);
  cert["n0_prime"] = integer_json(c.n0_prime);
  cert["mu"] = integer_json(c.mu);
  cert["sigma"] = c.sigma;
  cert["P0"] = c.p0.to_string(kept);
  cert["P1"] = c.p1.to_string(kept);
  cert["T0"] = c.t0.to_string(kept);
  if (c.sampled) {
    cert["sampler"] = Json{{"prime", c.sample_prime},
                           {"trials", c.sample_trials},
                           {"successes", c.sample_successes},
                           {"coefficients", u64_list(c.sample_coefficients)},
                           {"point", u64_list(c.sample_point)}};
  }
  Json dropped = Json::array();
  for (auto j : r.dropped_variables) dropped.push_back(var_name(j, names));

  Json d;
  d["route"] = r.route;
  d["search_box_bound"] = integer_json(r.search_box_bound);
  d["num_vars"] = r.num_vars;
  d["original_num_vars"] = r.original_num_vars;
  d["dropped_variables"] = dropped;
  d["certificate"] = cert;
  out.diagnostics = d;
  return out;
}

Json to_json(const Cone& c) {
  Json j;
  j["lattice_rank"] = c.ambient_rank();
  j["dimension"] = c.dimension();
  j["rays"] = vectors_json(c.rays());
  return j;
}

Json to_json(const HilbertBasis& hb) {
  Json j;
  j["dual_rays"] = vectors_json(hb.dual.rays());
  j["grading"] = vector_json(hb.grading);
  j["size"] = hb.elements.size();
  j["elements"] = vectors_json(hb.elements);
  return j;
}

Json to_json(const StaircaseResult& r) {
  Json j;
  j["empty"] = r.empty;
  j["window"] = r.window;
  j["equations_solved"] = r.equations_solved;
  j["free_parameter_count"] = r.free_parameter_count;
  j["trials"] = r.trials;
  j["successes"] = r.successes;
  j["estimated_dim"] = r.estimated_dim;
  j["formula_dim"] = r.formula_dim;
  j["prime"] = r.prime;
  return j;
}

Json to_json(const TruncatedExpansion& e) {
  Json j;
  j["alpha"] = vector_json(e.alpha.as_vector());
  j["m"] = e.m;
  j["prime"] = e.prime ? Json(*e.prime) : Json();
  Json coeffs = Json::array();
  for (const auto& c : e.coefficients) coeffs.push_back(integer_json(c));
  j["coefficients"] = coeffs;
  Json g = Json::object();
  for (const auto& [s, poly] : e.g) {
    Json terms = Json::array();
    for (const auto& t : poly.terms) {
      Json factors = Json::array();
      for (const auto& f : t.factors) factors.push_back(Json::array({f.var + 1, f.order, f.exponent}));
      terms.push_back(Json{{"coefficient", integer_json(t.coefficient)}, {"source", t.source}, {"factors", factors}});
    }
    g[std::to_string(s)] = Json{{"text", poly.to_string()}, {"terms", terms}};
  }
  j["g"] = g;
  return j;
}

Json to_json(const TorusSample& s) {
  Json j;
  j["found"] = s.found;
  j["trials"] = s.trials;
  j["successes"] = s.successes;
  j["prime"] = s.prime;
  j["coefficients"] = u64_list(s.coefficients);
  j["point"] = u64_list(s.point);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mld
