#pragma once

// JSON instance documents and report serialization. Objects use sorted keys
// (nlohmann::json's default map) and scalars are reduced "n/d" strings.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "phimod/admissibility.hpp"
#include "phimod/isomorphism.hpp"
#include "phimod/monodromy.hpp"
#include "phimod/normalform.hpp"
#include "phimod/phimodule.hpp"

namespace phimod {

using Json = nlohmann::json;

struct InstanceDocument {
  FrobeniusData frobenius;
  std::optional<std::vector<EmbeddingFiltration>> filt;
  std::optional<RawFiltration> raw;
  std::map<Position, Scalar> monodromy;

  /// Throws Error(Parse) when the document has no normal-form filtration.
  PhiModule module() const;
};

/// Throws Error(Parse) for schema problems; constructor invariants surface as
/// Error(InvariantViolation) or Error(DegenerateInput).
InstanceDocument parse_instance(const Json& j);
InstanceDocument read_instance_file(const std::string& path);

Json to_json(const Scalar& s);
Json to_json(const TauVector& v);
Json to_json(const TauMatrix& m);
Json to_json(const EmbeddingFiltration& filt);
Json to_json(const RawEmbedding& raw);
Json to_json(const PhiModule& m);
Json to_json(const InstanceDocument& doc);
Json to_json(const AdmissibilityReport& r);
Json to_json(const OracleVerdict& v);
Json to_json(const IsoDecision& d);
Json to_json(const IsoWitness& w);
Json to_json(const Normalization& n);
Json to_json(const MonodromyCheck& c);

/// Compact (indent < 0) or indented dump, always with a trailing newline.
std::string dump(const Json& j, int indent = -1);

}  // namespace phimod
