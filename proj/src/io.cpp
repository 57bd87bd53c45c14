#include "homjordan/io.hpp"

#include <algorithm>

namespace homjordan {

FieldDescriptor field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw ParseError("field: expected {\"type\": \"Q\"|\"GF\", ...}");
  std::string type = j.at("type").get<std::string>();
  if (type == "Q") return FieldDescriptor::rationals();
  if (type == "GF") {
    if (!j.contains("p") || !j.at("p").is_number_integer() ||
        j.at("p").get<std::int64_t>() <= 0)
      throw ParseError("field: GF needs a positive integer \"p\"");
    std::uint64_t p = j.at("p").get<std::uint64_t>();
    try {
      return FieldDescriptor::prime(p);
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("field: ") + e.what());
    }
  }
  throw ParseError("field: unknown type '" + type + "'");
}

Json field_to_json(const FieldDescriptor& f) {
  Json j;
  if (f.kind == FieldKind::Rationals) {
    j["type"] = "Q";
  } else {
    j["type"] = "GF";
    j["p"] = f.p;
  }
  return j;
}

namespace {

Mat dense_matrix_from_json(const Json& j, const FieldDescriptor& f, Index rows, Index cols,
                           const std::string& what) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows)
    throw ParseError(what + ": expected " + std::to_string(rows) + " rows");
  std::vector<std::vector<std::string>> grid;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw ParseError(what + ": expected " + std::to_string(cols) + " columns per row");
    std::vector<std::string> r;
    for (const auto& cell : row) {
      if (!cell.is_string()) throw ParseError(what + ": matrix entries are scalar strings");
      r.push_back(cell.get<std::string>());
    }
    grid.push_back(std::move(r));
  }
  return matrix_from_strings(f, grid);
}

Json dense_matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (const auto& row : matrix_to_strings(m)) {
    Json r = Json::array();
    for (const auto& cell : row) r.push_back(cell);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

HomAlgebra algebra_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("algebra document: expected an object");
  if (doc.value("kind", std::string()) != "hom_algebra")
    throw ParseError("algebra document: kind must be \"hom_algebra\"");
  if (!doc.contains("field")) throw ParseError("algebra document: missing field");
  FieldDescriptor f = field_from_json(doc.at("field"));
  if (!doc.contains("dim") || !doc.at("dim").is_number_integer() ||
      doc.at("dim").get<std::int64_t>() < 0)
    throw ParseError("algebra document: missing or invalid dim");
  Index n = doc.at("dim").get<Index>();
  if (doc.contains("basis_labels")) {
    const Json& labels = doc.at("basis_labels");
    if (!labels.is_array() || static_cast<Index>(labels.size()) != n)
      throw ParseError("algebra document: basis_labels length must equal dim");
  }

  StructureTensor t = StructureTensor::zero(f, n);
  if (doc.contains("mu")) {
    if (!doc.at("mu").is_array()) throw ParseError("algebra document: mu must be an array");
    std::size_t at = 0;
    for (const auto& entry : doc.at("mu")) {
      if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
          !entry.contains("k") || !entry.contains("c"))
        throw ParseError("mu[" + std::to_string(at) + "]: expected {i,j,k,c}");
      Index i = entry.at("i").get<Index>();
      Index j = entry.at("j").get<Index>();
      Index k = entry.at("k").get<Index>();
      if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
        throw ParseError("mu[" + std::to_string(at) + "]: index out of range");
      if (!entry.at("c").is_string())
        throw ParseError("mu[" + std::to_string(at) + "]: coefficient must be a scalar string");
      try {
        t.add_entry(i, j, k, Scalar::parse(entry.at("c").get<std::string>(), f));
      } catch (const ParseError& e) {
        throw ParseError("mu[" + std::to_string(at) + "]: " + e.what());
      }
      ++at;
    }
  }
  if (!doc.contains("alpha")) throw ParseError("algebra document: missing alpha");
  Mat alpha = dense_matrix_from_json(doc.at("alpha"), f, n, n, "alpha");
  HomAlgebra a = make_hom_algebra(f, std::move(t), std::move(alpha));
  a.jordan_mode = doc.value("jordan_mode", false);
  if (a.jordan_mode && !is_identity_matrix(a.alpha))
    throw ParseError("algebra document: jordan_mode requires the identity twist");
  return a;
}

Json algebra_to_json(const HomAlgebra& a, const std::vector<std::string>& basis_labels) {
  Json doc;
  doc["kind"] = "hom_algebra";
  doc["field"] = field_to_json(a.field);
  doc["dim"] = a.dim();
  if (!basis_labels.empty()) doc["basis_labels"] = basis_labels;
  Json entries = Json::array();
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = i; j < a.dim(); ++j)
      for (Index k = 0; k < a.dim(); ++k) {
        const Scalar& c = a.mu.c(i, j, k);
        if (c.is_zero()) continue;
        Json e;
        e["i"] = i;
        e["j"] = j;
        e["k"] = k;
        e["c"] = c.str();
        entries.push_back(e);
      }
  doc["mu"] = entries;
  doc["alpha"] = dense_matrix_to_json(a.alpha);
  if (a.jordan_mode) doc["jordan_mode"] = true;
  return doc;
}

HomAlgebra parse_algebra(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return algebra_from_json(doc);
}

std::string serialize_algebra(const HomAlgebra& a, const std::vector<std::string>& basis_labels) {
  return algebra_to_json(a, basis_labels).dump(2) + "\n";
}

BimoduleRep bimodule_from_json(const Json& doc,
                               const std::function<std::string(const std::string&)>& load_file,
                               const std::optional<HomAlgebra>& algebra_override) {
  if (!doc.is_object()) throw ParseError("bimodule document: expected an object");
  if (doc.value("kind", std::string()) != "bimodule")
    throw ParseError("bimodule document: kind must be \"bimodule\"");
  std::optional<HomAlgebra> alg = algebra_override;
  if (!alg) {
    if (!doc.contains("algebra")) throw ParseError("bimodule document: missing algebra");
    const Json& aj = doc.at("algebra");
    if (aj.is_string()) {
      alg = parse_algebra(load_file(aj.get<std::string>()));
    } else {
      alg = algebra_from_json(aj);
    }
  }
  if (!doc.contains("dim_w") || !doc.at("dim_w").is_number_integer() ||
      doc.at("dim_w").get<std::int64_t>() < 0)
    throw ParseError("bimodule document: missing or invalid dim_w");
  Index m = doc.at("dim_w").get<Index>();
  const FieldDescriptor& f = alg->field;
  if (!doc.contains("alpha_w")) throw ParseError("bimodule document: missing alpha_w");
  Mat alpha_w = dense_matrix_from_json(doc.at("alpha_w"), f, m, m, "alpha_w");
  if (!doc.contains("rho_l") || !doc.at("rho_l").is_array() ||
      static_cast<Index>(doc.at("rho_l").size()) != alg->dim())
    throw ParseError("bimodule document: rho_l needs one matrix per algebra basis element");
  std::vector<Mat> lambda;
  Index at = 0;
  for (const auto& lj : doc.at("rho_l")) {
    lambda.push_back(dense_matrix_from_json(lj, f, m, m, "rho_l[" + std::to_string(at) + "]"));
    ++at;
  }
  return make_bimodule(std::move(*alg), std::move(alpha_w), std::move(lambda));
}

Json bimodule_to_json(const BimoduleRep& r) {
  Json doc;
  doc["kind"] = "bimodule";
  doc["algebra"] = algebra_to_json(r.algebra);
  doc["dim_w"] = r.m;
  doc["alpha_w"] = dense_matrix_to_json(r.alpha_w);
  Json actions = Json::array();
  for (const Mat& l : r.lambda) actions.push_back(dense_matrix_to_json(l));
  doc["rho_l"] = actions;
  return doc;
}

Json vector_to_json(const Vec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.rows(); ++i) out.push_back(v(i).str());
  return out;
}

Json matrix_to_json(const Mat& m) { return dense_matrix_to_json(m); }

Json subspace_to_json(const Subspace& s) {
  Json out;
  out["ambient_dim"] = s.ambient;
  out["dim"] = s.dim();
  out["basis"] = dense_matrix_to_json(s.basis);
  return out;
}

Json witness_to_json(const Witness& w) {
  Json out;
  Json inputs = Json::object();
  for (const auto& [name, vec] : w.inputs) inputs[name] = vector_to_json(vec);
  out["inputs"] = inputs;
  out["lhs"] = vector_to_json(w.lhs);
  out["rhs"] = vector_to_json(w.rhs);
  return out;
}

Json check_to_json(const CheckResult& c) {
  Json out;
  out["check"] = c.check;
  out["verdict"] = verdict_str(c.verdict);
  if (c.witness) out["witness"] = witness_to_json(*c.witness);
  if (!c.reason.empty()) out["reason"] = c.reason;
  return out;
}

Json report_to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check_to_json(c));
  return checks;
}

Json series_to_json(const DerivedSeries& s) {
  Json out;
  Json terms = Json::array();
  for (const auto& t : s.terms) terms.push_back(subspace_to_json(t));
  out["terms"] = terms;
  Json dims = Json::array();
  for (const auto& t : s.terms) dims.push_back(t.dim());
  out["dims"] = dims;
  out["solvable"] = s.solvable;
  return out;
}

Json signature_to_json(const ClassificationSignature& s) {
  Json out;
  out["ideal_dim"] = s.ideal_tensor.dim();
  out["orbit_length"] = s.orbit_length;
  out["total_dim"] = s.total_dim;
  out["ideal_basis"] = dense_matrix_to_json(s.ideal_basis);
  Json tensor = Json::array();
  for (Index i = 0; i < s.ideal_tensor.dim(); ++i)
    for (Index j = i; j < s.ideal_tensor.dim(); ++j)
      for (Index k = 0; k < s.ideal_tensor.dim(); ++k) {
        const Scalar& c = s.ideal_tensor.c(i, j, k);
        if (c.is_zero()) continue;
        Json e;
        e["i"] = i;
        e["j"] = j;
        e["k"] = k;
        e["c"] = c.str();
        tensor.push_back(e);
      }
  out["ideal_mu"] = tensor;
  out["a1"] = dense_matrix_to_json(s.a1);
  Json invs = Json::array();
  for (const Poly& p : s.a1_invariants) invs.push_back(p.str());
  out["a1_invariants"] = invs;
  return out;
}

std::string content_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace homjordan
