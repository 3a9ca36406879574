#include "phimod/json_io.hpp"

#include <fstream>
#include <sstream>

#include "phimod/error.hpp"

namespace phimod {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) bad(where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(where + " is missing \"" + key + "\"");
  return *it;
}

Scalar scalar_of(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_scalar(j.get<std::string>());
    } catch (const Error& e) {
      bad(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(std::to_string(j.get<std::int64_t>()));
  bad(where + " must be a scalar string \"n\" or \"n/d\"");
}

long long integer_of(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where + " must be an integer");
  return j.get<long long>();
}

int small_int(const Json& j, const std::string& where) {
  const long long v = integer_of(j, where);
  if (v < -1000000 || v > 1000000) bad(where + " is out of range");
  return static_cast<int>(v);
}

bool bit_of(const Json& j, const std::string& where) {
  if (j.is_boolean()) return j.get<bool>();
  const long long v = integer_of(j, where);
  if (v != 0 && v != 1) bad(where + " must be 0 or 1");
  return v == 1;
}

TauVector tau_of(const Json& j, std::size_t f, const std::string& where) {
  if (!j.is_array()) bad(where + " must be an array");
  if (j.size() != f)
    bad(where + " has length " + std::to_string(j.size()) + ", expected f = " + std::to_string(f));
  std::vector<Scalar> coords;
  for (std::size_t i = 0; i < j.size(); ++i)
    coords.push_back(scalar_of(j[i], where + "[" + std::to_string(i) + "]"));
  return TauVector(std::move(coords));
}

linalg::Vec3 vec3_of(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) bad(where + " must be an array of 3 scalars");
  return {scalar_of(j[0], where + "[0]"), scalar_of(j[1], where + "[1]"),
          scalar_of(j[2], where + "[2]")};
}

EmbeddingFiltration filt_of(const Json& j, const std::string& where) {
  const Json& type = field(j, "type", where);
  if (!type.is_string()) bad(where + ".type must be a string");
  const std::string t = type.get<std::string>();
  if (t == "F0")
    return F0{small_int(field(j, "k1", where), where + ".k1"),
              small_int(field(j, "k2", where), where + ".k2"),
              scalar_of(field(j, "x1", where), where + ".x1"),
              bit_of(field(j, "x2", where), where + ".x2"),
              bit_of(field(j, "x2p", where), where + ".x2p")};
  if (t == "F1")
    return F1{small_int(field(j, "k", where), where + ".k"),
              bit_of(field(j, "x2", where), where + ".x2"),
              bit_of(field(j, "x2p", where), where + ".x2p")};
  if (t == "F2")
    return F2{small_int(field(j, "k", where), where + ".k"),
              bit_of(field(j, "x1", where), where + ".x1"),
              bit_of(field(j, "x2pp", where), where + ".x2pp")};
  if (t == "F3") return F3{};
  bad(where + ".type must be one of F0, F1, F2, F3 (got \"" + t + "\")");
}

RawEmbedding raw_of(const Json& j, const std::string& where) {
  RawEmbedding r;
  r.k1 = small_int(field(j, "k1", where), where + ".k1");
  r.k2 = small_int(field(j, "k2", where), where + ".k2");
  if (j.contains("u")) r.u = vec3_of(j["u"], where + ".u");
  if (j.contains("v")) r.v = vec3_of(j["v"], where + ".v");
  if (j.contains("lambda")) r.lambda = scalar_of(j["lambda"], where + ".lambda");
  if (j.contains("mu")) r.mu = scalar_of(j["mu"], where + ".mu");
  return r;
}

Json bit(bool b) { return b ? 1 : 0; }

}  // namespace

PhiModule InstanceDocument::module() const {
  if (!filt) bad("instance has no \"filt\" section");
  return PhiModule(frobenius, *filt);
}

InstanceDocument parse_instance(const Json& j) {
  const std::string top = "instance";
  const long long p = integer_of(field(j, "p", top), "p");
  const long long f_raw = integer_of(field(j, "f", top), "f");
  if (f_raw < 1 || f_raw > 4096) bad("f must be between 1 and 4096");
  const auto f = static_cast<std::size_t>(f_raw);
  FrobeniusData fro(p, tau_of(field(j, "a", top), f, "a"), tau_of(field(j, "b", top), f, "b"),
                    tau_of(field(j, "c", top), f, "c"));
  InstanceDocument doc{std::move(fro), std::nullopt, std::nullopt, {}};
  if (j.contains("filt")) {
    const Json& arr = j["filt"];
    if (!arr.is_array()) bad("filt must be an array");
    std::vector<EmbeddingFiltration> filt;
    for (std::size_t i = 0; i < arr.size(); ++i)
      filt.push_back(filt_of(arr[i], "filt[" + std::to_string(i) + "]"));
    PhiModule(doc.frobenius, filt);  // validates lengths and weights
    doc.filt = std::move(filt);
  }
  if (j.contains("raw_filtration")) {
    const Json& arr = j["raw_filtration"];
    if (!arr.is_array()) bad("raw_filtration must be an array");
    RawFiltration raw;
    for (std::size_t i = 0; i < arr.size(); ++i)
      raw.push_back(raw_of(arr[i], "raw_filtration[" + std::to_string(i) + "]"));
    validate_raw(raw, f);
    doc.raw = std::move(raw);
  }
  if (j.contains("monodromy")) {
    const Json& obj = j["monodromy"];
    if (!obj.is_object()) bad("monodromy must be an object like {\"12\": \"2\"}");
    for (auto it = obj.begin(); it != obj.end(); ++it)
      doc.monodromy[parse_position(it.key())] = scalar_of(it.value(), "monodromy." + it.key());
  }
  return doc;
}

InstanceDocument read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad(path + ": " + e.what());
  }
  return parse_instance(j);
}

Json to_json(const Scalar& s) { return format_scalar(s); }

Json to_json(const TauVector& v) {
  Json arr = Json::array();
  for (const auto& x : v.coords()) arr.push_back(format_scalar(x));
  return arr;
}

Json to_json(const TauMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < 3; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < 3; ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const EmbeddingFiltration& filt) {
  Json j;
  j["type"] = std::string(filtration_tag(filt));
  if (const auto* v = std::get_if<F0>(&filt)) {
    j["k1"] = v->k1;
    j["k2"] = v->k2;
    j["x1"] = format_scalar(v->x1);
    j["x2"] = bit(v->x2);
    j["x2p"] = bit(v->x2p);
  } else if (const auto* v = std::get_if<F1>(&filt)) {
    j["k"] = v->k;
    j["x2"] = bit(v->x2);
    j["x2p"] = bit(v->x2p);
  } else if (const auto* v = std::get_if<F2>(&filt)) {
    j["k"] = v->k;
    j["x1"] = bit(v->x1);
    j["x2pp"] = bit(v->x2pp);
  }
  return j;
}

Json to_json(const RawEmbedding& r) {
  Json j;
  j["k1"] = r.k1;
  j["k2"] = r.k2;
  j["u"] = Json::array({format_scalar(r.u[0]), format_scalar(r.u[1]), format_scalar(r.u[2])});
  j["v"] = Json::array({format_scalar(r.v[0]), format_scalar(r.v[1]), format_scalar(r.v[2])});
  j["lambda"] = format_scalar(r.lambda);
  j["mu"] = format_scalar(r.mu);
  return j;
}

Json to_json(const PhiModule& m) {
  Json j;
  j["p"] = m.p();
  j["f"] = m.f();
  j["a"] = to_json(m.frobenius().a());
  j["b"] = to_json(m.frobenius().b());
  j["c"] = to_json(m.frobenius().c());
  Json filt = Json::array();
  for (const auto& e : m.filtrations()) filt.push_back(to_json(e));
  j["filt"] = std::move(filt);
  return j;
}

Json to_json(const InstanceDocument& doc) {
  Json j;
  j["p"] = doc.frobenius.p();
  j["f"] = doc.frobenius.f();
  j["a"] = to_json(doc.frobenius.a());
  j["b"] = to_json(doc.frobenius.b());
  j["c"] = to_json(doc.frobenius.c());
  if (doc.filt) {
    Json filt = Json::array();
    for (const auto& e : *doc.filt) filt.push_back(to_json(e));
    j["filt"] = std::move(filt);
  }
  if (doc.raw) {
    Json raw = Json::array();
    for (const auto& e : *doc.raw) raw.push_back(to_json(e));
    j["raw_filtration"] = std::move(raw);
  }
  if (!doc.monodromy.empty()) {
    Json mono = Json::object();
    for (const auto& [pos, value] : doc.monodromy) mono[to_string(pos)] = format_scalar(value);
    j["monodromy"] = std::move(mono);
  }
  return j;
}

Json to_json(const AdmissibilityReport& r) {
  Json j;
  j["admissible"] = r.admissible;
  j["equality_eq9"] = r.equality_eq9;
  j["newton_full"] = r.newton_full.to_string();
  j["hodge_full"] = r.hodge_full;
  j["irreducible"] = r.irreducible;
  Json ineq = Json::object();
  for (std::size_t k = 0; k < r.inequalities.size(); ++k) {
    const auto& line = r.inequalities[k];
    ineq[std::string(kInequalityLabels[k])] = {
        {"submodule", std::string(to_string(line.submodule))},
        {"newton", line.newton.to_string()},
        {"hodge", line.hodge},
        {"slack", std::string(to_string(line.slack))}};
  }
  j["inequalities"] = std::move(ineq);
  Json subs = Json::array();
  for (auto s : r.admissible_submodules) subs.push_back(std::string(to_string(s)));
  j["admissible_submodules"] = std::move(subs);
  return j;
}

Json to_json(const OracleVerdict& v) {
  Json j;
  j["admissible"] = v.admissible;
  j["equality_eq9"] = v.full_equal;
  Json slack = Json::object();
  for (std::size_t k = 0; k < v.slack.size(); ++k)
    slack[std::string(kInequalityLabels[k])] = std::string(to_string(v.slack[k]));
  j["slack"] = std::move(slack);
  return j;
}

Json to_json(const IsoDecision& d) {
  Json j;
  j["isomorphic"] = d.isomorphic;
  j["sigma"] = d.sigma ? Json(to_string(*d.sigma)) : Json(nullptr);
  j["case"] = d.sigma ? Json(case_number(*d.sigma)) : Json(nullptr);
  j["per_embedding_case"] = d.per_embedding_case;
  j["norm_matching_cases"] = d.norm_matching_cases;
  return j;
}

Json to_json(const IsoWitness& w) {
  Json j;
  j["sigma"] = to_string(w.sigma);
  j["h"] = Json::array({to_json(w.h[0]), to_json(w.h[1]), to_json(w.h[2])});
  return j;
}

Json to_json(const Normalization& n) {
  Json j;
  j["module"] = to_json(n.module);
  Json audit;
  audit["permutation"] = permutation_name(n.perm);
  audit["rescale"] =
      Json::array({to_json(n.rescale[0]), to_json(n.rescale[1]), to_json(n.rescale[2])});
  audit["rejected_permutations"] = n.rejected;
  j["audit"] = std::move(audit);
  return j;
}

Json to_json(const MonodromyCheck& c) {
  Json j;
  j["valid"] = c.valid;
  j["reasons"] = c.reasons;
  return j;
}

std::string dump(const Json& j, int indent) { return j.dump(indent) + "\n"; }

}  // namespace phimod
