#include "app.hpp"

#include "collar/algebras.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace collar::app {

namespace {

constexpr double kEstimateCut = 1e-3;
const std::vector<int> kSequenceNs{1, 2, 4, 8, 16};

Subspace parse_space(const Json& j, int ambient, const std::string& field);

int get_int(const Json& j, const std::string& key, const std::string& field) {
  if (!j.contains(key)) throw ConfigError(field + "." + key, "missing");
  if (!j.at(key).is_number_integer()) throw ConfigError(field + "." + key, "expected an integer");
  return j.at(key).get<int>();
}

Subspace parse_realization(const std::string& name, int offset, int ambient, const std::string& field) {
  AlgebraRealization r;
  try {
    r = realization_by_name(name);
  } catch (const PreconditionError& e) {
    throw ConfigError(field, e.what());
  }
  if (offset < 0 || offset + r.ambient_dim() > ambient)
    throw ConfigError(field, name + " at offset " + std::to_string(offset) + " does not fit in so(" +
                                 std::to_string(ambient) + ")");
  return embed(r.space, ambient, offset);
}

Element parse_sparse_element(const Json& j, int ambient, const std::string& field) {
  if (!j.is_array()) throw ConfigError(field, "expected a list of [r, s, value] triples");
  Matrix m = Matrix::Zero(ambient, ambient);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string f = field + "[" + std::to_string(t) + "]";
    const Json& e = j[t];
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        !e[2].is_number())
      throw ConfigError(f, "expected [r, s, value]");
    const int r = e[0].get<int>(), s = e[1].get<int>();
    if (r < 0 || s < 0 || r >= ambient || s >= ambient || r == s)
      throw ConfigError(f, "index out of range or on the diagonal");
    m += e[2].get<double>() * Element::basis(ambient, r, s).matrix();
  }
  return Element::trusted(m);
}

Element parse_dense_element(const Json& j, int ambient, const std::string& field) {
  if (!j.is_array() || static_cast<int>(j.size()) != ambient)
    throw ConfigError(field, "expected " + std::to_string(ambient) + " rows");
  Matrix m(ambient, ambient);
  for (int r = 0; r < ambient; ++r) {
    const Json& row = j[r];
    const std::string f = field + "[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != ambient)
      throw ConfigError(f, "expected " + std::to_string(ambient) + " entries");
    for (int c = 0; c < ambient; ++c) {
      if (!row[c].is_number()) throw ConfigError(f + "[" + std::to_string(c) + "]", "expected a number");
      m(r, c) = row[c].get<double>();
    }
  }
  if ((m + m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff()))
    throw ConfigError(field, "matrix is not skew-symmetric");
  return Element(m);
}

Subspace parse_space(const Json& j, int ambient, const std::string& field) {
  if (j.is_string()) return parse_realization(j.get<std::string>(), 0, ambient, field);
  if (!j.is_object()) throw ConfigError(field, "expected a realization name or an object");
  if (j.contains("realization")) {
    if (!j.at("realization").is_string()) throw ConfigError(field + ".realization", "expected a string");
    const int offset = j.contains("offset") ? get_int(j, "offset", field) : 0;
    return parse_realization(j.at("realization").get<std::string>(), offset, ambient, field + ".realization");
  }
  if (j.contains("sum")) {
    const Json& parts = j.at("sum");
    if (!parts.is_array() || parts.empty()) throw ConfigError(field + ".sum", "expected a non-empty list");
    Subspace acc(ambient);
    for (std::size_t i = 0; i < parts.size(); ++i)
      acc = sum(acc, parse_space(parts[i], ambient, field + ".sum[" + std::to_string(i) + "]"));
    return acc;
  }
  std::vector<Element> gens;
  if (j.contains("sparse")) {
    const Json& list = j.at("sparse");
    if (!list.is_array()) throw ConfigError(field + ".sparse", "expected a list of generators");
    for (std::size_t i = 0; i < list.size(); ++i)
      gens.push_back(parse_sparse_element(list[i], ambient, field + ".sparse[" + std::to_string(i) + "]"));
  } else if (j.contains("elements")) {
    const Json& list = j.at("elements");
    if (!list.is_array()) throw ConfigError(field + ".elements", "expected a list of matrices");
    for (std::size_t i = 0; i < list.size(); ++i)
      gens.push_back(parse_dense_element(list[i], ambient, field + ".elements[" + std::to_string(i) + "]"));
  } else {
    throw ConfigError(field, "expected one of realization, sum, sparse, elements");
  }
  if (gens.empty()) return Subspace(ambient);
  return Subspace::span(gens);
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

double cross_gram(const Subspace& a, const Subspace& b) {
  if (a.empty() || b.empty()) return 0.0;
  return (a.flat_basis().transpose() * b.flat_basis()).cwiseAbs().maxCoeff();
}

Json header(const RunConfig& cfg, const Input* in) {
  Json r;
  r["schema_version"] = kSchemaVersion;
  r["command"] = cfg.command;
  if (in) {
    Json inp;
    inp["kind"] = in->entry ? "entry" : "config";
    inp["label"] = in->label;
    if (in->entry) {
      inp["entry"] = in->entry->id;
      inp["p"] = in->p;
      inp["origin"] = in->entry->origin;
      inp["expected"] = to_string(in->entry->expected);
    }
    r["input"] = std::move(inp);
    r["triple"] = in->triple.name;
    r["ambient"] = in->triple.ambient_dim();
  }
  r["seed"] = cfg.seed;
  r["parameters"] = {{"tol", cfg.tol}, {"restarts", cfg.restarts}, {"iters", cfg.iters}};
  return r;
}

Json dims_json(const Decomposition& d) {
  Json j;
  const std::pair<const char*, const Subspace*> spaces[] = {
      {"g", &d.triple.g}, {"k", &d.triple.k}, {"h", &d.triple.h}, {"m", &d.m},       {"s", &d.s},
      {"p", &d.p},        {"k0", &d.k0},      {"h0", &d.h0},      {"hprime", &d.hprime}, {"h1", &d.h1},
      {"m1", &d.m1},      {"l", &d.l},        {"z_l", &d.z_l},    {"n_l", &d.n_l},   {"s1", &d.s1},
      {"s2", &d.s2},      {"s_nl", &d.s_nl},  {"s_rest", &d.s_rest}};
  for (const auto& [name, sp] : spaces) j[name] = sp->dim();
  return j;
}

Json residuals_json(const Decomposition& d) {
  Json j;
  j["h_perp_m"] = cross_gram(d.triple.h, d.m);
  j["h_perp_s"] = cross_gram(d.triple.h, d.s);
  j["m_perp_s"] = cross_gram(d.m, d.s);
  j["h1_perp_m1"] = cross_gram(d.h1, d.m1);
  j["h_in_k"] = inclusion_residual(d.triple.h, d.triple.k);
  j["k_in_g"] = inclusion_residual(d.triple.k, d.triple.g);
  j["closure_g"] = closure_residual(d.triple.g);
  j["closure_k"] = closure_residual(d.triple.k);
  j["closure_h"] = closure_residual(d.triple.h);
  j["dim_defect"] = d.triple.g.dim() - d.triple.h.dim() - d.m.dim() - d.s.dim();
  return j;
}

Json verdict_json(const Verdict& v, bool with_pair = true) {
  Json j;
  j["kind"] = to_string(v.kind);
  j["method"] = v.method;
  j["reason"] = v.reason;
  Json data = Json::object();
  for (const auto& [k, x] : v.data) data[k] = x;
  j["data"] = std::move(data);
  j["converged"] = v.converged;
  if (!v.samples.empty()) {
    Json s = Json::array();
    for (const auto& smp : v.samples)
      s.push_back({{"n", smp.n}, {"bracket_norm", smp.bracket_norm}, {"wedge", smp.wedge}});
    j["samples"] = std::move(s);
  }
  if (with_pair && v.x.ambient_dim() > 0) {
    j["x"] = matrix_json(v.x.matrix());
    j["y"] = matrix_json(v.y.matrix());
  }
  return j;
}

Json timing_json(const Verdict& v) { return {{"restarts_used", v.restarts_used}, {"evaluations", v.evaluations}}; }

bool certified(VerdictKind k) {
  return k == VerdictKind::CertifiedBracketIntersection || k == VerdictKind::CertifiedCurvatureBound;
}

Decomposition decompose_input(const RunConfig& cfg, const Triple& t) {
  DecomposeOptions o;
  o.seed = cfg.seed;
  return decompose(t, cfg.tol, o);
}

Outcome with_verdict(const RunConfig& cfg, const Input& in, const Decomposition& dec, const Verdict& v, int code) {
  Outcome out;
  out.report = header(cfg, &in);
  out.report["dims"] = dims_json(dec);
  out.report["residuals"] = residuals_json(dec);
  out.report["verdict"] = verdict_json(v);
  out.report["timing"] = timing_json(v);
  out.exit_code = code;
  return out;
}

const CatalogEntry* lookup(const std::string& text) {
  try {
    return &find_entry(parse_entry(text).id);
  } catch (const std::exception&) {
    return nullptr;
  }
}

void emit_md_table(std::ostringstream& os, const Json& obj) {
  os << "| key | value |\n|---|---|\n";
  for (const auto& [k, v] : obj.items()) {
    if (v.is_structured()) continue;
    os << "| " << k << " | " << (v.is_string() ? v.get<std::string>() : v.dump()) << " |\n";
  }
  os << "\n";
}

}  // namespace

Input load_config(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("$", "expected an object");
  if (doc.contains("entry")) {
    if (!doc.at("entry").is_string()) throw ConfigError("$.entry", "expected a string");
    return resolve_entry(doc.at("entry").get<std::string>());
  }
  const int n = get_int(doc, "ambient", "$");
  if (n < 2) throw ConfigError("$.ambient", "must be at least 2");
  Input in;
  for (const char* key : {"g", "k", "h"})
    if (!doc.contains(key)) throw ConfigError(std::string("$.") + key, "missing");
  in.triple.g = parse_space(doc.at("g"), n, "$.g");
  in.triple.k = parse_space(doc.at("k"), n, "$.k");
  in.triple.h = parse_space(doc.at("h"), n, "$.h");
  if (doc.contains("h1_override")) in.triple.h1_override = parse_space(doc.at("h1_override"), n, "$.h1_override");
  in.triple.name = doc.value("name", std::string("config triple"));
  in.sphere_flag = doc.value("sphere_flag", false);
  in.label = in.triple.name;
  try {
    validate(in.triple);
  } catch (const PreconditionError& e) {
    throw ConfigError("$", e.what());
  }
  return in;
}

Input load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError(path, "cannot open");
  Json doc;
  try {
    doc = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw ConfigError(path, std::string("parse error at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  return load_config(doc);
}

Input resolve_entry(const std::string& text) {
  const EntryRef ref = parse_entry(text);
  Input in;
  in.entry = &find_entry(ref.id);
  in.p = ref.p_given ? ref.p : in.entry->p_default;
  in.triple = build(in.entry->id, in.p);
  in.sphere_flag = in.entry->sphere_flag;
  in.label = text;
  return in;
}

Outcome cmd_decompose(const RunConfig& cfg, const Input& in) {
  const Decomposition dec = decompose_input(cfg, in.triple);
  Outcome out;
  out.report = header(cfg, &in);
  out.report["dims"] = dims_json(dec);
  out.report["residuals"] = residuals_json(dec);
  out.report["h1_overridden"] = dec.h1_overridden;
  Json comps = Json::array();
  for (const Component& c : dec.components) {
    comps.push_back({{"dim", c.space.dim()},
                     {"class", to_string(c.phi.verdict)},
                     {"min_sigma", c.phi.min_sigma},
                     {"scale", c.phi.scale},
                     {"possibly_reducible", c.possibly_reducible}});
  }
  out.report["components"] = std::move(comps);
  if (in.entry && in.entry->dims) {
    const ExpectedDims e = in.entry->dims(in.p);
    Json exp;
    const std::pair<const char*, int> pairs[] = {{"h", e.h},   {"m", e.m},   {"s", e.s},  {"k0", e.k0},
                                                 {"h0", e.h0}, {"h1", e.h1}, {"m1", e.m1}};
    bool match = true;
    const Json& got = out.report["dims"];
    for (const auto& [k, v] : pairs) {
      if (v < 0) continue;
      exp[k] = v;
      match = match && got.at(k).get<int>() == v;
    }
    out.report["expected_dims"] = std::move(exp);
    out.report["dims_match"] = match;
  }
  return out;
}

Outcome cmd_certify(const RunConfig& cfg, const Input& in) {
  const Decomposition dec = decompose_input(cfg, in.triple);
  const bool curvature_first = in.entry && in.entry->expected == ExpectedKind::CertifiedCurvatureBound;
  Verdict v = curvature_first ? certify_positive_curvature(dec, cfg.restarts, true, {}, cfg.seed)
                              : certify_bracket_intersection(dec, cfg.tol, {}, cfg.restarts, cfg.seed);
  Json attempts = Json::array();
  if (!certified(v.kind) && !curvature_first && in.sphere_flag) {
    attempts.push_back(verdict_json(v, false));
    v = certify_positive_curvature(dec, cfg.restarts, true, {}, cfg.seed);
  }
  Outcome out = with_verdict(cfg, in, dec, v, certified(v.kind) ? kOk : kInconclusive);
  if (!attempts.empty()) out.report["earlier_attempts"] = std::move(attempts);
  return out;
}

Outcome cmd_refute(const RunConfig& cfg, const Input& in) {
  if (in.entry && !in.entry->witness_family.empty()) {
    const Witness w = builtin_witness(in.entry->witness_family, in.p);
    const Decomposition dec = decompose_input(cfg, w.triple);
    Verdict v = verify_witness(dec, w.x, w.y);
    v.method = "builtin witness " + w.family;
    return with_verdict(cfg, in, dec, v, v.kind == VerdictKind::ViolationWitness ? kViolation : kInconclusive);
  }
  if (in.entry && in.entry->expected == ExpectedKind::SequenceViolation) {
    const Decomposition dec = decompose_input(cfg, in.triple);
    const Verdict v = g2_sequence_verdict(kSequenceNs);
    return with_verdict(cfg, in, dec, v, v.kind == VerdictKind::SequenceViolation ? kViolation : kInconclusive);
  }
  const Decomposition dec = decompose_input(cfg, in.triple);
  EstimateOptions o;
  o.restarts = cfg.restarts;
  o.iters = cfg.iters;
  o.seed = cfg.seed;
  o.stop_below = kEstimateCut;
  const Verdict est = estimate_inf_rho(dec, o);
  if (est.kind == VerdictKind::NumericalEstimate && norm(est.x) > 0 && norm(est.y) > 0) {
    Verdict v = verify_witness(dec, est.x, est.y);
    if (v.kind == VerdictKind::ViolationWitness) {
      v.method = "optimization";
      v.restarts_used = est.restarts_used;
      v.evaluations = est.evaluations;
      return with_verdict(cfg, in, dec, v, kViolation);
    }
  }
  Outcome out = with_verdict(cfg, in, dec, est, kInconclusive);
  out.report["verdict"]["kind"] = to_string(VerdictKind::Inconclusive);
  out.report["verdict"]["reason"] = "no exact commuting pair found; " + est.reason;
  return out;
}

Outcome cmd_estimate(const RunConfig& cfg, const Input& in) {
  const Decomposition dec = decompose_input(cfg, in.triple);
  EstimateOptions o;
  o.restarts = cfg.restarts;
  o.iters = cfg.iters;
  o.seed = cfg.seed;
  const Verdict v = estimate_inf_rho(dec, o);
  int code = kInconclusive;
  if (v.kind == VerdictKind::NumericalEstimate) code = v.data.at("rho_inf") < kEstimateCut ? kViolation : kOk;
  return with_verdict(cfg, in, dec, v, code);
}

Outcome cmd_catalog(const RunConfig& cfg) {
  std::map<std::string, std::string> filter;
  for (const std::string& f : cfg.filters) {
    const auto eq = f.find('=');
    if (eq == std::string::npos) throw ConfigError("--filter", "expected key=value, got '" + f + "'");
    filter[f.substr(0, eq)] = f.substr(eq + 1);
  }
  Outcome out;
  out.report = header(cfg, nullptr);
  Json filt = Json::object();
  for (const auto& [k, v] : filter) filt[k] = v;
  out.report["filter"] = std::move(filt);
  Json list = Json::array();
  for (const CatalogEntry* e : list_entries(filter)) {
    Json j;
    j["id"] = e->id;
    j["description"] = e->description;
    j["origin"] = e->origin;
    j["realizable"] = e->realizable;
    j["expected"] = to_string(e->expected);
    j["p_min"] = e->p_min;
    j["p_max"] = e->p_max;
    j["p_default"] = e->p_default;
    j["rank"] = e->rank;
    j["sphere_flag"] = e->sphere_flag;
    if (!e->witness_family.empty()) j["witness_family"] = e->witness_family;
    if (!e->reduces_to.empty()) j["reduces_to"] = e->reduces_to;
    if (e->dims) {
      const ExpectedDims d = e->dims(e->p_default);
      j["dims"] = {{"h", d.h}, {"m", d.m}, {"s", d.s}, {"k0", d.k0}, {"h0", d.h0}, {"h1", d.h1}, {"m1", d.m1}};
    }
    list.push_back(std::move(j));
  }
  out.report["count"] = list.size();
  out.report["entries"] = std::move(list);
  return out;
}

Outcome out_of_scope(const RunConfig& cfg, const std::string& entry_text, const std::string& why) {
  Outcome out;
  out.report = header(cfg, nullptr);
  Json inp{{"kind", "entry"}, {"label", entry_text}};
  if (const CatalogEntry* e = lookup(entry_text)) {
    inp["entry"] = e->id;
    inp["description"] = e->description;
    inp["origin"] = e->origin;
    inp["expected"] = to_string(e->expected);
    if (!e->reduces_to.empty()) inp["reduces_to"] = e->reduces_to;
  }
  out.report["input"] = std::move(inp);
  out.report["verdict"] = {{"kind", "OutOfScope"}, {"reason", why}};
  out.exit_code = kOutOfScope;
  return out;
}

Outcome run(const RunConfig& cfg) {
  auto error_report = [&](const std::string& kind, const std::string& msg, int code) {
    Outcome out;
    out.report = header(cfg, nullptr);
    out.report["error"] = {{"kind", kind}, {"message", msg}};
    out.exit_code = code;
    return out;
  };
  try {
    if (cfg.command == "catalog") return cmd_catalog(cfg);
    if (cfg.entry.empty() == cfg.config_path.empty())
      return error_report("usage", "exactly one of --entry or --config is required", kUsage);
    Input in;
    try {
      in = cfg.entry.empty() ? load_config_file(cfg.config_path) : resolve_entry(cfg.entry);
    } catch (const UnrealizableFamily& e) {
      return out_of_scope(cfg, cfg.entry, e.what());
    }
    if (cfg.command == "decompose") return cmd_decompose(cfg, in);
    if (cfg.command == "certify") return cmd_certify(cfg, in);
    if (cfg.command == "refute") return cmd_refute(cfg, in);
    if (cfg.command == "estimate") return cmd_estimate(cfg, in);
    return error_report("usage", "unknown command " + cfg.command, kUsage);
  } catch (const ConfigError& e) {
    Outcome out = error_report("config", e.what(), kUsage);
    out.report["error"]["field"] = e.field();
    return out;
  } catch (const PreconditionError& e) {
    return error_report("precondition", e.what(), kUsage);
  } catch (const std::exception& e) {
    return error_report("internal", e.what(), 1);
  }
}

std::string render(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::ostringstream os;
  os << "# collar " << report.value("command", std::string()) << "\n\n";
  if (report.contains("triple")) os << "Triple: `" << report["triple"].get<std::string>() << "`\n\n";
  for (const char* section : {"input", "parameters", "dims", "residuals", "error"}) {
    if (!report.contains(section)) continue;
    os << "## " << section << "\n\n";
    emit_md_table(os, report[section]);
  }
  if (report.contains("components")) {
    os << "## components\n\n| dim | class | min_sigma |\n|---|---|---|\n";
    for (const Json& c : report["components"])
      os << "| " << c["dim"].dump() << " | " << c["class"].get<std::string>() << " | " << c["min_sigma"].dump()
         << " |\n";
    os << "\n";
  }
  if (report.contains("verdict")) {
    const Json& v = report["verdict"];
    os << "## verdict\n\n**" << v.value("kind", std::string()) << "**";
    if (v.contains("method")) os << " via " << v["method"].get<std::string>();
    os << ": " << v.value("reason", std::string()) << "\n\n";
    if (v.contains("data")) emit_md_table(os, v["data"]);
  }
  if (report.contains("entries")) {
    os << "## entries\n\n| id | expected | p range | rank | origin |\n|---|---|---|---|---|\n";
    for (const Json& e : report["entries"]) {
      const int hi = e["p_max"].get<int>();
      os << "| " << e["id"].get<std::string>() << " | " << e["expected"].get<std::string>() << " | "
         << e["p_min"].get<int>() << ".." << (hi < 0 ? std::string("inf") : std::to_string(hi)) << " | "
         << e["rank"].get<int>() << " | " << e["origin"].get<std::string>() << " |\n";
    }
    os << "\n";
  }
  return os.str();
}

std::vector<std::vector<std::string>> suite_commands() {
  return {
      {"catalog"},
      {"decompose", "--entry", "g2-so0-7-in-so8"},
      {"decompose", "--entry", "sp-series:p=1"},
      {"decompose", "--entry", "spin7-so8-so9p:p=0"},
      {"certify", "--entry", "spin7-so8-so9p:p=0"},
      {"certify", "--entry", "spin7-so8-so9p:p=1"},
      {"certify", "--entry", "spin7-so8-so9p:p=2"},
      {"certify", "--entry", "g2-so0-7-so8p:p=0"},
      {"certify", "--entry", "g2-so0-7-so8p:p=1"},
      {"certify", "--entry", "su3-su4-spin7"},
      {"certify", "--entry", "sp2-su4-su5"},
      {"certify", "--entry", "sp-rank4:p=1"},
      {"certify", "--entry", "sp-series:p=1"},
      {"certify", "--entry", "f4-case"},
      {"refute", "--entry", "spin-octonion-case1:p=0"},
      {"refute", "--entry", "spin-octonion-case2:p=1"},
      {"refute", "--entry", "spin-octonion-case4:p=3"},
      {"refute", "--entry", "su3-long-root:p=1"},
      {"refute", "--entry", "su(p+4)-su3-pair:p=2"},
      {"refute", "--entry", "g2-su2-diagonal"},
      {"estimate", "--entry", "su3-su4-spin7", "--restarts", "8"},
      {"estimate", "--entry", "spin-octonion-case1:p=0", "--restarts", "8"},
  };
}

}  // namespace collar::app
