// Command line front end: verification, structure analysis, constructions,
// classification, bimodule checks, and the family discrepancy log, over JSON
// documents. Exit codes: 0 = property holds / success, 1 = property fails
// (witness in the report), 2 = usage error or undecidable.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "homjordan/corpus.hpp"
#include "homjordan/io.hpp"
#include "homjordan/structure.hpp"

using namespace homjordan;

namespace {

struct Options {
  std::uint64_t seed = 0;
  std::uint64_t trials = 64;
  std::uint64_t budget = 1ull << 16;
  std::string format = "json";
  bool timings = false;

  StructureOptions structure() const {
    StructureOptions s;
    s.trial_limit = trials;
    s.enumeration_budget = budget;
    return s;
  }
  CheckOptions checks() const {
    CheckOptions c;
    c.enumeration_budget = budget;
    return c;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

HomAlgebra load_algebra(const std::string& path, Json* envelope) {
  std::string bytes = slurp(path);
  if (envelope) (*envelope)["inputs"][path] = content_digest(bytes);
  return parse_algebra(bytes);
}

Mat load_matrix(const std::string& path, const FieldDescriptor& f, Json* envelope) {
  std::string bytes = slurp(path);
  if (envelope) (*envelope)["inputs"][path] = content_digest(bytes);
  Json doc = Json::parse(bytes);
  if (!doc.is_array()) throw ParseError(path + ": expected a JSON array of rows");
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : doc) {
    std::vector<std::string> row;
    for (const auto& c : r) row.push_back(c.get<std::string>());
    rows.push_back(row);
  }
  return matrix_from_strings(f, rows);
}

// ---------------------------------------------------------------------------
// Rendering. Text mode is a fixed pretty-printing of the same JSON data.
// ---------------------------------------------------------------------------

bool is_scalar_json(const Json& j) {
  return j.is_string() || j.is_number() || j.is_boolean() || j.is_null();
}

std::string scalar_str(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render_text(const Json& j, std::ostream& os, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar_json(value)) {
        os << pad << key << ": " << scalar_str(value) << "\n";
      } else if (value.is_array() && value.empty()) {
        os << pad << key << ": []\n";
      } else {
        os << pad << key << ":\n";
        render_text(value, os, indent + 2);
      }
    }
  } else if (j.is_array()) {
    bool all_scalar = true;
    for (const auto& v : j)
      if (!is_scalar_json(v)) all_scalar = false;
    if (all_scalar) {
      os << pad << "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ", ";
        os << scalar_str(j[i]);
      }
      os << "]\n";
    } else {
      for (const auto& v : j) {
        os << pad << "-\n";
        render_text(v, os, indent + 2);
      }
    }
  } else {
    os << pad << scalar_str(j) << "\n";
  }
}

std::string g_command_line;

Json make_envelope(const std::string& command, const Options& opt) {
  Json j;
  j["command"] = command;
  j["command_line"] = g_command_line;
  j["inputs"] = Json::object();
  j["seed"] = opt.seed;
  j["trials"] = opt.trials;
  j["budget"] = opt.budget;
  j["timing_ms"] = nullptr;
  return j;
}

int emit(Json report, const Options& opt, int code,
         std::chrono::steady_clock::time_point started) {
  if (opt.timings) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    report["timing_ms"] = ms;
  }
  report["status_code"] = code;
  if (opt.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    render_text(report, std::cout, 0);
  }
  return code;
}

// Failures still produce a machine-readable report on stdout; the human
// summary goes to stderr.
int emit_error(const Options& opt, const std::string& message, int code) {
  std::cerr << "error: " << message << "\n";
  Json rep;
  rep["command_line"] = g_command_line;
  rep["error"] = message;
  rep["status_code"] = code;
  if (opt.format == "json") {
    std::cout << rep.dump(2) << "\n";
  } else {
    render_text(rep, std::cout, 0);
  }
  return code;
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Holds: return 0;
    case Verdict::Fails: return 1;
    default: return 2;
  }
}

std::string simple_verdict_str(SimpleVerdict v) {
  switch (v) {
    case SimpleVerdict::Simple: return "simple";
    case SimpleVerdict::NotSimple: return "not_simple";
    default: return "unsupported";
  }
}

// ---------------------------------------------------------------------------
// Command bodies
// ---------------------------------------------------------------------------

int cmd_verify(const std::string& file, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Json rep = make_envelope("verify", opt);
  HomAlgebra a = load_algebra(file, &rep);
  VerificationReport v = verify_algebra(a, opt.checks());
  rep["dim"] = a.dim();
  rep["field"] = field_to_json(a.field);
  rep["checks"] = report_to_json(v);
  Verdict overall = v.overall();
  rep["overall"] = verdict_str(overall);
  return emit(rep, opt, verdict_code(overall), t0);
}

int cmd_analyze(const std::string& file, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Json rep = make_envelope("analyze", opt);
  HomAlgebra a = load_algebra(file, &rep);
  const FieldDescriptor& f = a.field;
  rep["dim"] = a.dim();
  rep["field"] = field_to_json(f);

  VerificationReport v = verify_algebra(a, opt.checks());
  rep["checks"] = report_to_json(v);

  DerivedSeries ds = derived_series(a);
  rep["derived_series"] = series_to_json(ds);

  Subspace ker = kernel(a.alpha, f);
  Subspace im = image(a.alpha, f);
  rep["alpha_kernel"] = subspace_to_json(ker);
  rep["alpha_image"] = subspace_to_json(im);
  bool invertible = ker.is_zero() && a.dim() == im.dim();
  rep["alpha_invertible"] = invertible;

  bool multiplicative = v.find("multiplicative")->holds();
  rep["jordan_type"] = invertible && multiplicative;

  if (invertible && multiplicative && f.kind == FieldKind::Rationals) {
    HomAlgebra induced = induced_jordan(a, /*certify=*/false);
    Subspace rad = radical(induced);
    rep["induced_radical"] = subspace_to_json(rad);
  } else {
    rep["induced_radical"] = nullptr;
  }

  try {
    SimplicityResult sr = is_simple(a, opt.seed, opt.structure());
    Json simple;
    simple["verdict"] = simple_verdict_str(sr.verdict);
    if (!sr.reason.empty()) simple["reason"] = sr.reason;
    if (sr.witness) simple["witness_ideal"] = subspace_to_json(*sr.witness);
    if (sr.induced_decomposition) {
      const DecompositionResult& dec = *sr.induced_decomposition;
      Json d;
      Json dims = Json::array();
      Json bases = Json::array();
      for (const Subspace& s : dec.ideals) {
        dims.push_back(s.dim());
        bases.push_back(matrix_to_json(s.basis));
      }
      d["ideal_dims"] = dims;
      d["ideal_bases"] = bases;
      d["orbit_partition"] = dec.orbit_partition;
      d["transitive"] = dec.transitive;
      simple["induced_decomposition"] = d;
    }
    rep["simplicity"] = simple;
  } catch (const Error& e) {
    rep["simplicity"] = Json{{"verdict", "error"}, {"reason", e.what()}};
  }

  if (f.kind == FieldKind::Rationals) {
    try {
      SemisimplicityResult ss = is_semisimple(a, opt.seed, opt.structure());
      Json sj;
      sj["semisimple"] = ss.semisimple;
      if (!ss.reason.empty()) sj["reason"] = ss.reason;
      Json dims = Json::array();
      for (const Subspace& s : ss.summands) dims.push_back(s.dim());
      sj["summand_dims"] = dims;
      rep["semisimplicity"] = sj;
    } catch (const Error& e) {
      rep["semisimplicity"] = Json{{"semisimple", nullptr}, {"reason", e.what()}};
    }
  } else {
    rep["semisimplicity"] = nullptr;
  }
  return emit(rep, opt, 0, t0);
}

int cmd_induced(const std::string& file, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Json rep = make_envelope("induced", opt);
  HomAlgebra a = load_algebra(file, &rep);
  HomAlgebra ind = induced_jordan(a);
  rep["result"] = algebra_to_json(ind);
  rep["plain_identity"] = verdict_str(check_jordan(ind, opt.checks()).verdict);
  return emit(rep, opt, 0, t0);
}

int cmd_twist(const std::string& file, const std::string& alpha_file, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Json rep = make_envelope("twist", opt);
  HomAlgebra j = load_algebra(file, &rep);
  Mat alpha = load_matrix(alpha_file, j.field, &rep);
  HomAlgebra twisted = yau_twist(j, alpha);
  rep["result"] = algebra_to_json(twisted);
  rep["twisted_identity"] = verdict_str(check_hom_jordan(twisted, opt.checks()).verdict);
  rep["multiplicative"] = verdict_str(check_multiplicative(twisted).verdict);
  return emit(rep, opt, 0, t0);
}

int cmd_quotient(const std::string& file, const std::string& gens_json, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Json rep = make_envelope("quotient", opt);
  HomAlgebra a = load_algebra(file, &rep);
  Json gens = Json::parse(gens_json);
  std::vector<Vec> vectors;
  for (const auto& g : gens) {
    Vec v = zero_vector(a.field, a.dim());
    if (static_cast<Index>(g.size()) != a.dim())
      throw ParseError("generator length does not match the algebra dimension");
    for (Index i = 0; i < a.dim(); ++i) v(i) = Scalar::parse(g[i].get<std::string>(), a.field);
    vectors.push_back(v);
  }
  Subspace ideal = ideal_closure(a, vectors);
  rep["ideal"] = subspace_to_json(ideal);
  HomAlgebra q = quotient_algebra(a, ideal);
  rep["result"] = algebra_to_json(q);
  return emit(rep, opt, 0, t0);
}

int cmd_split(const std::string& file, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Json rep = make_envelope("split", opt);
  HomAlgebra a = load_algebra(file, &rep);
  SplitResult s = split_idempotent_alpha(a);
  rep["summand_quotient"] = algebra_to_json(s.summand_quotient);
  rep["summand_kernel"] = algebra_to_json(s.summand_kernel);
  rep["iso"] = matrix_to_json(s.iso);
  rep["iso_checks"] = report_to_json(s.iso_report);
  return emit(rep, opt, s.iso_report.all_hold() ? 0 : 1, t0);
}

int cmd_family(const std::string& kind, const std::string& field_spec, const std::string& k,
               const std::string& p, const std::string& q, Index n, const std::string& alpha_kind,
               const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Json rep = make_envelope("family", opt);
  FieldDescriptor f = FieldDescriptor::rationals();
  if (field_spec != "Q") {
    if (field_spec.rfind("GF:", 0) != 0) throw ParseError("--field expects Q or GF:<p>");
    f = FieldDescriptor::prime(std::stoull(field_spec.substr(3)));
  }
  HomAlgebra a = zero_algebra(f, 0);
  if (kind == "dim1") {
    a = family_dim1(f, Scalar::parse(k, f));
  } else if (kind == "dim2") {
    a = family_dim2(f, Scalar::parse(p, f), Scalar::parse(q, f));
  } else if (kind == "cyclic") {
    Mat alpha = identity(f, n);
    if (alpha_kind == "identity") {
    } else if (alpha_kind == "zero") {
      alpha = zeros(f, n, n);
    } else if (alpha_kind == "shift") {
      alpha = zeros(f, n, n);
      for (Index i = 0; i < n; ++i) alpha((i + 1) % n, i) = Scalar::one(f);
    } else {
      alpha = load_matrix(alpha_kind, f, &rep);
    }
    a = family_cyclic(f, n, alpha);
  } else {
    throw ParseError("--kind expects dim1, dim2 or cyclic");
  }
  rep["result"] = algebra_to_json(a);
  return emit(rep, opt, 0, t0);
}

int cmd_signature(const std::string& file, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Json rep = make_envelope("signature", opt);
  HomAlgebra a = load_algebra(file, &rep);
  try {
    ClassificationSignature sig = classification_signature(a, opt.seed);
    rep["signature"] = signature_to_json(sig);
    return emit(rep, opt, 0, t0);
  } catch (const NotSimpleError& e) {
    rep["error"] = e.what();
    return emit(rep, opt, 1, t0);
  }
}

int cmd_iso(const std::string& file_a, const std::string& file_b, bool search,
            const std::string& m1_file, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Json rep = make_envelope("iso", opt);
  HomAlgebra a = load_algebra(file_a, &rep);
  HomAlgebra b = load_algebra(file_b, &rep);

  if (!m1_file.empty()) {
    // Certificate checking: lift a proposed ideal map and certify it.
    ClassificationSignature sa = classification_signature(a, opt.seed);
    ClassificationSignature sb = classification_signature(b, opt.seed);
    Mat m1 = load_matrix(m1_file, a.field, &rep);
    rep["signature_a"] = signature_to_json(sa);
    rep["signature_b"] = signature_to_json(sb);
    try {
      Mat phi = lift_ideal_isomorphism(sa, sb, m1, a, b);
      rep["verdict"] = "isomorphic";
      rep["iso"] = matrix_to_json(phi);
      return emit(rep, opt, 0, t0);
    } catch (const Error& e) {
      rep["verdict"] = "certificate_rejected";
      rep["reason"] = e.what();
      return emit(rep, opt, 1, t0);
    }
  }

  if (search) {
    try {
      IsoSearchResult r = iso_search_smallfield(a, b, opt.budget, opt.seed);
      rep["method"] = r.method;
      rep["candidates"] = r.candidates;
      if (r.found) {
        rep["verdict"] = "isomorphic";
        rep["iso"] = matrix_to_json(r.iso);
        return emit(rep, opt, 0, t0);
      }
      rep["verdict"] = "not_isomorphic";
      return emit(rep, opt, 1, t0);
    } catch (const BudgetExceededError& e) {
      rep["verdict"] = "undecided";
      rep["reason"] = e.what();
      return emit(rep, opt, 2, t0);
    } catch (const PreconditionError& e) {
      rep["verdict"] = "undecided";
      rep["reason"] = e.what();
      return emit(rep, opt, 2, t0);
    }
  }

  // Necessary conditions only.
  try {
    ClassificationSignature sa = classification_signature(a, opt.seed);
    ClassificationSignature sb = classification_signature(b, opt.seed);
    rep["signature_a"] = signature_to_json(sa);
    rep["signature_b"] = signature_to_json(sb);
    SignatureComparison cmp = compare_signatures(sa, sb);
    if (!cmp.possibly_isomorphic) {
      rep["verdict"] = "not_isomorphic";
      rep["distinction"] = cmp.distinction;
      return emit(rep, opt, 1, t0);
    }
    rep["verdict"] = "possibly_isomorphic";
    return emit(rep, opt, 2, t0);
  } catch (const Error& e) {
    rep["verdict"] = "undecided";
    rep["reason"] = e.what();
    return emit(rep, opt, 2, t0);
  }
}

BimoduleRep load_bimodule(const std::string& alg_file, const std::string& mod_file, Json* rep) {
  std::optional<HomAlgebra> override_alg;
  if (!alg_file.empty()) override_alg = load_algebra(alg_file, rep);
  std::string bytes = slurp(mod_file);
  (*rep)["inputs"][mod_file] = content_digest(bytes);
  Json doc = Json::parse(bytes);
  return bimodule_from_json(doc, [&](const std::string& p) { return slurp(p); }, override_alg);
}

int cmd_bimodule_verify(const std::string& alg_file, const std::string& mod_file,
                        const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Json rep = make_envelope("bimodule verify", opt);
  BimoduleRep r = load_bimodule(alg_file, mod_file, &rep);
  VerificationReport checks = check_bimodule(r);
  checks.checks.push_back(check_equivariance(r));
  rep["dim_w"] = r.m;
  rep["checks"] = report_to_json(checks);
  // Equivariance is informational; the verdict covers the two axioms.
  Verdict overall = Verdict::Holds;
  for (const auto& c : checks.checks)
    if (c.check != "equivariance" && c.verdict == Verdict::Fails) overall = Verdict::Fails;
  rep["overall"] = verdict_str(overall);
  return emit(rep, opt, verdict_code(overall), t0);
}

int cmd_bimodule_transport(const std::string& alg_file, const std::string& mod_file,
                           const std::string& direction, const std::string& alpha_w_file,
                           const std::string& alpha_file, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Json rep = make_envelope("bimodule transport", opt);
  BimoduleRep r = load_bimodule(alg_file, mod_file, &rep);
  if (direction == "to-module") {
    try {
      JordanModuleRep m = bimodule_to_module(r);
      Json out;
      out["kind"] = "bimodule";
      out["algebra"] = algebra_to_json(m.algebra);
      out["dim_w"] = m.m;
      out["alpha_w"] = m.alpha_w ? matrix_to_json(*m.alpha_w) : Json(nullptr);
      Json actions = Json::array();
      for (const Mat& l : m.lambda_prime) actions.push_back(matrix_to_json(l));
      out["rho_l"] = actions;
      rep["result"] = out;
      rep["module_checks"] = report_to_json(check_jordan_module(m));
      return emit(rep, opt, 0, t0);
    } catch (const Error& e) {
      rep["error"] = e.what();
      return emit(rep, opt, 1, t0);
    }
  }
  if (direction != "to-bimodule") throw ParseError("--direction expects to-module or to-bimodule");
  // Interpret the loaded representation as a plain module of its algebra.
  if (alpha_w_file.empty() || alpha_file.empty())
    throw ParseError("to-bimodule transport needs --alpha-w and --alpha");
  JordanModuleRep m = make_jordan_module(r.algebra, r.lambda, std::nullopt);
  Mat alpha_w = load_matrix(alpha_w_file, r.algebra.field, &rep);
  Mat alpha = load_matrix(alpha_file, r.algebra.field, &rep);
  try {
    BimoduleRep out = module_to_bimodule(m, alpha_w, alpha);
    rep["result"] = bimodule_to_json(out);
    rep["bimodule_checks"] = report_to_json(check_bimodule(out));
    return emit(rep, opt, 0, t0);
  } catch (const Error& e) {
    rep["error"] = e.what();
    return emit(rep, opt, 1, t0);
  }
}

int cmd_bimodule_analyze(const std::string& alg_file, const std::string& mod_file,
                         const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Json rep = make_envelope("bimodule analyze", opt);
  BimoduleRep r = load_bimodule(alg_file, mod_file, &rep);
  rep["dim_w"] = r.m;
  rep["axioms"] = report_to_json(check_bimodule(r));
  CheckResult eq = check_equivariance(r);
  rep["equivariance"] = verdict_str(eq.verdict);

  IrreducibilityResult irr = is_irreducible(r, opt.seed, opt.structure());
  Json ij;
  ij["verdict"] = irr.verdict == Irreducibility::Irreducible
                      ? "irreducible"
                      : (irr.verdict == Irreducibility::Reducible ? "reducible"
                                                                  : "probably_irreducible");
  ij["exhaustive"] = irr.exhaustive;
  if (irr.witness) ij["witness_submodule"] = subspace_to_json(*irr.witness);
  rep["irreducibility"] = ij;

  if (eq.holds()) {
    KernelImageReport ki = kernel_image_analysis(r);
    Json kj;
    kj["kernel"] = subspace_to_json(ki.ker);
    kj["image"] = subspace_to_json(ki.im);
    kj["kernel_is_submodule"] = ki.ker_is_submodule;
    kj["image_is_submodule"] = ki.im_is_submodule;
    kj["induced_map"] = matrix_to_json(ki.induced_map);
    kj["bijective"] = ki.bijective;
    kj["intertwines_actions"] = ki.intertwines_actions;
    kj["intertwines_alpha_w"] = ki.intertwines_alpha_w;
    rep["kernel_image"] = kj;
    try {
      IrreducibilityTransferReport tr = irreducibility_transfer_check(r, opt.seed, opt.structure());
      Json tj;
      tj["alpha_w_invertible"] = tr.alpha_w_invertible;
      tj["transfer_consistent"] = tr.transfer_consistent;
      tj["invertibility_consistent"] = tr.invertibility_consistent;
      if (!tr.notes.empty()) tj["notes"] = tr.notes;
      rep["irreducibility_transfer"] = tj;
    } catch (const Error& e) {
      rep["irreducibility_transfer"] = Json{{"skipped", e.what()}};
    }
  } else {
    rep["kernel_image"] = nullptr;
    rep["irreducibility_transfer"] = nullptr;
  }
  return emit(rep, opt, 0, t0);
}

// ---------------------------------------------------------------------------
// Discrepancy log: run the documented example families through the verifiers
// and the exhaustive oracle, and tabulate verdict vs claim per cell.
// ---------------------------------------------------------------------------

Json family_cell(const std::string& family, const Json& params, const HomAlgebra& over_q,
                 const HomAlgebra& over_gf5, bool claims_simple, const Options& opt,
                 bool& oracle_agree_out) {
  Json cell;
  cell["family"] = family;
  cell["params"] = params;
  cell["claimed"] = claims_simple ? "hom_jordan,simple" : "hom_jordan";

  CheckResult q_hj = check_hom_jordan(over_q, opt.checks());
  CheckResult gf5_pol = check_hom_jordan_polarized(over_gf5);
  CheckResult gf5_exh = check_hom_jordan_exhaustive(over_gf5, opt.budget);
  cell["q_hom_jordan"] = verdict_str(q_hj.verdict);
  cell["gf5_polarized"] = verdict_str(gf5_pol.verdict);
  cell["gf5_exhaustive"] = verdict_str(gf5_exh.verdict);
  bool agree = gf5_pol.verdict == gf5_exh.verdict;
  cell["oracle_agreement"] = agree;
  oracle_agree_out = agree;
  if (q_hj.verdict == Verdict::Fails && q_hj.witness) {
    Json w;
    w["x"] = vector_to_json(q_hj.witness->inputs[0].second);
    w["y"] = vector_to_json(q_hj.witness->inputs[1].second);
    cell["q_witness"] = w;
  }

  auto simple_str = [&](const HomAlgebra& a) -> std::string {
    try {
      return simple_verdict_str(is_simple(a, opt.seed, opt.structure()).verdict);
    } catch (const Error& e) {
      return std::string("error: ") + e.what();
    }
  };
  std::string q_simple = simple_str(over_q);
  std::string gf5_simple = simple_str(over_gf5);
  cell["q_simple"] = q_simple;
  cell["gf5_simple"] = gf5_simple;

  bool matches = q_hj.verdict == Verdict::Holds && gf5_exh.verdict == Verdict::Holds;
  if (claims_simple) matches = matches && gf5_simple == "simple" && q_simple != "not_simple";
  cell["matches_claim"] = matches;
  return cell;
}

int cmd_discrepancy_log(const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Json rep = make_envelope("discrepancy-log", opt);
  FieldDescriptor Q = FieldDescriptor::rationals();
  FieldDescriptor GF5 = FieldDescriptor::prime(5);
  Json cells = Json::array();
  bool all_oracles_agree = true;
  int matching = 0;

  const std::vector<long> grid = {-1, 0, 1, 2, 3};

  for (long k : grid) {
    bool agree = true;
    Json params;
    params["k"] = k;
    Json cell = family_cell("dim1", params, family_dim1(Q, Scalar::in_field(k, Q)),
                            family_dim1(GF5, Scalar::in_field(k, GF5)),
                            /*claims_simple=*/k != 0, opt, agree);
    all_oracles_agree = all_oracles_agree && agree;
    if (cell["matches_claim"].get<bool>()) ++matching;
    cells.push_back(std::move(cell));
  }

  for (long p : grid)
    for (long q : grid) {
      bool agree = true;
      Json params;
      params["p"] = p;
      params["q"] = q;
      Json cell = family_cell(
          "dim2", params, family_dim2(Q, Scalar::in_field(p, Q), Scalar::in_field(q, Q)),
          family_dim2(GF5, Scalar::in_field(p, GF5), Scalar::in_field(q, GF5)),
          /*claims_simple=*/true, opt, agree);
      all_oracles_agree = all_oracles_agree && agree;
      if (cell["matches_claim"].get<bool>()) ++matching;
      cells.push_back(std::move(cell));
    }

  for (Index n : {3, 4, 5}) {
    for (std::string alpha_kind : {"identity", "shift", "zero"}) {
      auto make_alpha = [&](const FieldDescriptor& f) {
        if (alpha_kind == "identity") return identity(f, n);
        if (alpha_kind == "zero") return zeros(f, n, n);
        Mat m = zeros(f, n, n);
        for (Index i = 0; i < n; ++i) m((i + 1) % n, i) = Scalar::one(f);
        return m;
      };
      bool agree = true;
      Json params;
      params["n"] = n;
      params["alpha"] = alpha_kind;
      Json cell = family_cell("cyclic", params, family_cyclic(Q, n, make_alpha(Q)),
                              family_cyclic(GF5, n, make_alpha(GF5)),
                              /*claims_simple=*/true, opt, agree);
      all_oracles_agree = all_oracles_agree && agree;
      if (cell["matches_claim"].get<bool>()) ++matching;
      cells.push_back(std::move(cell));
    }
  }

  rep["cells"] = cells;
  rep["cell_count"] = cells.size();
  rep["cells_matching_claim"] = matching;
  rep["all_oracles_agree"] = all_oracles_agree;
  return emit(rep, opt, all_oracles_agree ? 0 : 1, t0);
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) {
    if (i) g_command_line += " ";
    g_command_line += argv[i];
  }
  CLI::App app{"Exact-arithmetic structure tool for finite-dimensional twisted Jordan algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  Options opt;
  app.add_option("--seed", opt.seed, "Seed for randomized searches")->capture_default_str();
  app.add_option("--trials", opt.trials, "Trial limit for randomized searches")
      ->capture_default_str();
  app.add_option("--budget", opt.budget, "Enumeration budget for exhaustive checks")
      ->capture_default_str();
  app.add_option("--format", opt.format, "Report format: json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--timings", opt.timings, "Include wall-clock timing in reports");

  std::string file, file_b, alpha_file, gens_json, m1_file;
  std::string kind, field_spec = "Q", k_str = "1", p_str = "1", q_str = "1";
  std::string alpha_kind = "identity", direction = "to-module", alpha_w_file;
  Index n = 3;
  bool search = false;

  CLI::App* verify = app.add_subcommand("verify", "Check the defining identities of an algebra");
  verify->add_option("file", file)->required();

  CLI::App* analyze = app.add_subcommand("analyze", "Structure analysis of an algebra");
  analyze->add_option("file", file)->required();

  CLI::App* induced = app.add_subcommand("induced", "Untwist a multiplicative algebra");
  induced->add_option("file", file)->required();

  CLI::App* twist = app.add_subcommand("twist", "Twist a plain algebra by an endomorphism");
  twist->add_option("file", file)->required();
  twist->add_option("--alpha", alpha_file, "JSON matrix file")->required();

  CLI::App* quotient = app.add_subcommand("quotient", "Quotient by the ideal closure of generators");
  quotient->add_option("file", file)->required();
  quotient->add_option("--ideal-gens", gens_json, "JSON list of coordinate vectors")->required();

  CLI::App* split = app.add_subcommand("split", "Split along an idempotent twist map");
  split->add_option("file", file)->required();

  CLI::App* family = app.add_subcommand("family", "Emit a documented example family");
  family->add_option("--kind", kind, "dim1, dim2 or cyclic")->required();
  family->add_option("--field", field_spec, "Q or GF:<p>")->capture_default_str();
  family->add_option("--k", k_str, "dim1 twist scale")->capture_default_str();
  family->add_option("--p", p_str, "dim2 twist entry")->capture_default_str();
  family->add_option("--q", q_str, "dim2 twist entry")->capture_default_str();
  family->add_option("--n", n, "cyclic dimension (>= 3)")->capture_default_str();
  family->add_option("--alpha", alpha_kind, "cyclic twist: identity, shift, zero or a matrix file")
      ->capture_default_str();

  CLI::App* signature = app.add_subcommand("signature", "Classification signature of a simple algebra");
  signature->add_option("file", file)->required();

  CLI::App* iso = app.add_subcommand("iso", "Isomorphism comparison of two algebras");
  iso->add_option("fileA", file)->required();
  iso->add_option("fileB", file_b)->required();
  iso->add_flag("--search", search, "Exhaustive certified search (finite fields)");
  iso->add_option("--m1", m1_file, "Ideal-map certificate to lift and check");

  CLI::App* bimodule = app.add_subcommand("bimodule", "Bimodule operations");
  bimodule->require_subcommand(1);
  CLI::App* bverify = bimodule->add_subcommand("verify", "Check the bimodule axioms");
  CLI::App* btransport = bimodule->add_subcommand("transport", "Move between twisted and plain modules");
  CLI::App* banalyze = bimodule->add_subcommand("analyze", "Submodule structure of a bimodule");
  for (CLI::App* sub : {bverify, btransport, banalyze}) {
    sub->add_option("algfile", file, "Algebra document (overrides the one in modfile)");
    sub->add_option("modfile", file_b, "Bimodule document");
  }
  btransport->add_option("--direction", direction, "to-module or to-bimodule")
      ->capture_default_str();
  btransport->add_option("--alpha-w", alpha_w_file, "Module structure map (to-bimodule)");
  btransport->add_option("--alpha", alpha_file, "Algebra twist map (to-bimodule)");

  CLI::App* log = app.add_subcommand("discrepancy-log",
                                     "Family grid: checker verdicts vs documented claims");
  (void)log;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);   // prints the message or the requested help text
    return rc == 0 ? 0 : 2;  // usage problems exit 2
  }

  // `bimodule verify mod.json` with a single positional: it is the module.
  if (bimodule->parsed()) {
    if (file_b.empty()) {
      file_b = file;
      file.clear();
    }
    if (file_b.empty()) {
      std::cerr << "error: bimodule commands need a module document\n";
      return 2;
    }
  }

  try {
    if (verify->parsed()) return cmd_verify(file, opt);
    if (analyze->parsed()) return cmd_analyze(file, opt);
    if (induced->parsed()) return cmd_induced(file, opt);
    if (twist->parsed()) return cmd_twist(file, alpha_file, opt);
    if (quotient->parsed()) return cmd_quotient(file, gens_json, opt);
    if (split->parsed()) return cmd_split(file, opt);
    if (family->parsed())
      return cmd_family(kind, field_spec, k_str, p_str, q_str, n, alpha_kind, opt);
    if (signature->parsed()) return cmd_signature(file, opt);
    if (iso->parsed()) return cmd_iso(file, file_b, search, m1_file, opt);
    if (bimodule->parsed()) {
      if (bverify->parsed()) return cmd_bimodule_verify(file, file_b, opt);
      if (btransport->parsed())
        return cmd_bimodule_transport(file, file_b, direction, alpha_w_file, alpha_file, opt);
      if (banalyze->parsed()) return cmd_bimodule_analyze(file, file_b, opt);
    }
    if (log->parsed()) return cmd_discrepancy_log(opt);
  } catch (const ParseError& e) {
    return emit_error(opt, e.what(), 2);
  } catch (const PreconditionError& e) {
    return emit_error(opt, e.what(), 1);
  } catch (const Error& e) {
    return emit_error(opt, e.what(), 1);
  } catch (const nlohmann::json::exception& e) {
    return emit_error(opt, std::string("invalid JSON input: ") + e.what(), 2);
  }
  return 2;
}
