#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mld/cone.hpp"
#include "mld/hilbert.hpp"
#include "mld/hypersurface.hpp"
#include "mld/jet.hpp"
#include "mld/toric.hpp"

namespace mld {

using Json = nlohmann::ordered_json;

/// Numbers when they fit in 64 bits, decimal strings otherwise.
Json integer_json(const Integer& v);
/// Accepts an integral JSON number or a decimal string.
Integer integer_from_json(const Json& j, const std::string& what = "integer");

Json vector_json(const LatticeVector& v);
LatticeVector vector_from_json(const Json& j, std::size_t rank, const std::string& what = "vector");

struct ConeInput {
  Cone cone;
  std::optional<FaceSpec> face;
};

/// {"lattice_rank": n, "rays": [[...], ...], "face": optional}. The face is
/// either {"functional": [...]} or {"rays": [indices]} into the input rays.
ConeInput parse_cone_json(const Json& j);
ConeInput parse_cone_file(const std::filesystem::path& path);

/// {"vars": k, "support": [[...], ...]}; validate_support is applied.
Support parse_support_json(const Json& j);
Support parse_support_file(const std::filesystem::path& path);

/// "2,1,2" -> (2,1,2).
AlphaTuple parse_alpha(const std::string& text);

/// The common report shape emitted for both variety kinds.
struct MldReport {
  std::string variety_kind;     // "toric" or "hypersurface"
  bool lower_bound_key = false;  // serialize λ as "lambda_lower_bound"
  Integer lambda;
  Integer mather_mld;
  std::string status;
  Json witness;
  std::vector<std::string> assumptions;
  Json diagnostics = Json::object();
  std::optional<Json> timings;

  Json to_json() const;
  static MldReport from_json(const Json& j);
  bool operator==(const MldReport&) const;
};

MldReport make_report(const ToricMldReport& r);
MldReport make_report(const HypersurfaceMldReport& r, const std::vector<std::string>& names = {});

Json to_json(const Cone& c);
Json to_json(const HilbertBasis& hb);
Json to_json(const StaircaseResult& r);
Json to_json(const TruncatedExpansion& e);
Json to_json(const TorusSample& s);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

}  // namespace mld
