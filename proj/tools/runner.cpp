#include "runner.hpp"

#include <chrono>
#include <sstream>

#include "comatrix/adjunction.hpp"
#include "comatrix/fixtures.hpp"

namespace comatrix::cli {

namespace {

constexpr std::size_t kMaxViolations = 50;
constexpr std::size_t kNone = static_cast<std::size_t>(-1);

Json report_json(const CheckReport& r) {
  Json j;
  j["subject"] = r.subject;
  j["checked"] = r.checked;
  Json vs = Json::array();
  for (std::size_t i = 0; i < r.violations.size() && i < kMaxViolations; ++i) {
    vs.push_back({{"identity", r.violations[i].identity}, {"witness", r.violations[i].witness}});
  }
  j["violations"] = vs;
  if (r.violations.size() > kMaxViolations) j["omitted"] = r.violations.size() - kMaxViolations;
  return j;
}

Json table_json(const MonoidTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.table) rows.push_back(row);
  return rows;
}

Json describe_all(const std::vector<SubBimodule>& v) {
  Json out = Json::array();
  for (const auto& i : v) out.push_back(describe(i));
  return out;
}

Json index_or_null(std::optional<std::size_t> i) { return i ? Json(*i) : Json(nullptr); }

std::string error_name(const Error& e) {
  if (dynamic_cast<const NotProjective*>(&e)) return "NotProjective";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
  if (dynamic_cast<const FieldMismatch*>(&e)) return "FieldMismatch";
  if (dynamic_cast<const ArithmeticOverflow*>(&e)) return "ArithmeticOverflow";
  if (dynamic_cast<const NotClosed*>(&e)) return "NotClosed";
  if (dynamic_cast<const MissingUnit*>(&e)) return "MissingUnit";
  if (dynamic_cast<const NotColinear*>(&e)) return "NotColinear";
  if (dynamic_cast<const NoCertificate*>(&e)) return "NoCertificate";
  if (dynamic_cast<const IllDefinedMap*>(&e)) return "IllDefinedMap";
  if (dynamic_cast<const InvalidStructure*>(&e)) return "InvalidStructure";
  return "Error";
}

struct Outcome {
  Json result = Json::object();
  std::vector<CheckReport> reports;
};

EnumerationSettings settings_of(const RunOptions& o) { return {o.budget, o.workers}; }

Outcome task_validate(const Workspace& w, const std::string& name) {
  Outcome out;
  if (auto it = w.objects.algebras.find(name); it != w.objects.algebras.end()) {
    const Algebra& a = *it->second;
    out.result["kind"] = "algebra";
    out.result["dim"] = a.dim();
    out.result["commutative"] = a.is_commutative();
    out.reports.push_back(validate_algebra(a));
    return out;
  }
  const Bimodule& m = w.objects.bimodules.at(name);
  out.result["kind"] = "bimodule";
  out.result["dim"] = m.dim();
  out.result["left_dim"] = m.left_algebra()->dim();
  out.result["right_dim"] = m.right_algebra()->dim();
  CheckReport r = validate_bimodule(m);
  out.reports.push_back(r);
  if (r.ok()) {
    try {
      FramedBimodule fr = frame(m);
      out.result["right_projective"] = true;
      out.result["dual_basis_size"] = fr.basis.size();
      out.result["endomorphism_dim"] = fr.endo.algebra->dim();
    } catch (const NotProjective& e) {
      out.result["right_projective"] = false;
      out.result["reason"] = e.what();
    }
  }
  return out;
}

Outcome task_coring(const Bimodule& sigma, const TaskDef& t) {
  Outcome out;
  FramedBimodule fr = frame(sigma);
  ComatrixCoring c = build_comatrix_coring(fr);
  auto coring = std::make_shared<Coring>(*c.coring);
  for (const auto& [key, value] : t.options) {
    if (key != "perturb") continue;
    std::size_t col = std::stoul(value) % coring->comult.cols();
    coring->comult.add_to(0, col, coring->field().one());
    out.result["perturbed_column"] = col;
  }
  out.result["dim"] = coring->dim();
  out.result["base_dim"] = coring->base->dim();
  out.result["dual_basis_size"] = fr.basis.size();
  out.result["counit"] = coring->counit.bracketed();
  out.reports.push_back(check_coring_axioms(*coring));
  return out;
}

Outcome task_endos(const Bimodule& sigma, const RunOptions& o) {
  Outcome out;
  ComatrixCoring c = build_comatrix_coring(frame(sigma));
  EndomorphismMonoid e = coring_endomorphisms(c.coring, settings_of(o));
  out.result["affine_points"] = e.affine_points;
  out.result["order"] = e.elements.size();
  out.result["unit"] = e.table.unit;
  out.result["automorphisms"] = e.automorphisms();
  Json els = Json::array();
  CheckReport morphisms;
  morphisms.subject = "enumerated endomorphisms";
  for (const auto& g : e.elements) {
    els.push_back(g.matrix.bracketed());
    morphisms.merge(check_coring_morphism(g));
  }
  out.result["elements"] = els;
  out.result["table"] = table_json(e.table);
  out.reports.push_back(morphisms);
  out.reports.push_back(check_monoid(e.table));
  return out;
}

Outcome task_inv(const Bimodule& sigma, const RunOptions& o) {
  Outcome out;
  FramedBimodule fr = frame(sigma);
  std::vector<SubBimodule> subs = enumerate_sub_bimodules(fr.endo, settings_of(o));
  std::size_t il = 0, ir = 0;
  for (const auto& i : subs) {
    if (membership(fr.endo, i, Hand::Left)) ++il;
    if (membership(fr.endo, i, Hand::Right)) ++ir;
  }
  SubBimoduleMonoid inv = enumerate_inv(fr.endo, settings_of(o));
  out.result["subspaces"] = subspace_count(fr.sigma.field(), fr.endo.algebra->dim(), std::nullopt);
  out.result["sub_bimodules"] = subs.size();
  out.result["left_unital"] = il;
  out.result["right_unital"] = ir;
  out.result["order"] = inv.elements.size();
  out.result["abelian"] = inv.table.is_commutative();
  out.result["elements"] = describe_all(inv.elements);
  out.result["table"] = table_json(inv.table);
  out.reports.push_back(check_monoid(inv.table));
  return out;
}

const CheckReport* find_report(const TheoremBundle& t, const std::string& subject) {
  for (const auto& r : t.reports)
    if (r.subject == subject) return &r;
  return nullptr;
}

Outcome task_gamma(const Bimodule& sigma, const RunOptions& o) {
  Outcome out;
  FramedBimodule fr = frame(sigma);
  TheoremBundle t = verify_theorems(fr, settings_of(o));
  ComatrixCoring c = build_comatrix_coring(fr);
  for (const auto& [hand, list, key] :
       {std::tuple{Hand::Left, &t.left_unital, "left"}, std::tuple{Hand::Right, &t.right_unital, "right"}}) {
    Json rows = Json::array();
    for (const auto& i : *list) {
      auto cert = membership(fr.endo, i, hand);
      Json row;
      row["ideal"] = describe(i);
      row["endomorphism"] = cert ? index_or_null(t.endos.index_of(gamma(c, *cert).matrix)) : Json(nullptr);
      rows.push_back(row);
    }
    out.result[key] = rows;
  }
  out.result["f_left"] = describe_all(t.f_left_images);
  out.result["f_right"] = describe_all(t.f_right_images);
  for (const char* s : {"monoid tables", "left correspondence", "right correspondence"}) {
    if (const CheckReport* r = find_report(t, s)) out.reports.push_back(*r);
  }
  return out;
}

Outcome task_hat(const Bimodule& sigma, const RunOptions& o) {
  Outcome out;
  FramedBimodule fr = frame(sigma);
  TheoremBundle t = verify_theorems(fr, settings_of(o));
  ComatrixCoring c = build_comatrix_coring(fr);
  SweedlerCoring sw = build_sweedler_coring(fr.endo.extension);
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.endos.elements.size(); ++i) {
    CoringMorphism h = hat_map(c, sw, t.endos.elements[i]);
    rows.push_back({{"endomorphism", i}, {"fixed", describe(fixed_elements(sw, h))}});
  }
  out.result["hat"] = rows;
  for (const char* s : {"monoid tables", "hat map"}) {
    if (const CheckReport* r = find_report(t, s)) out.reports.push_back(*r);
  }
  return out;
}

Json free_json(const FreeBasis& b) {
  Json j;
  j["found"] = b.found;
  if (b.found) {
    j["rank"] = b.basis.size();
    Json els = Json::array();
    for (const auto& v : b.basis) els.push_back(v.transpose().bracketed());
    j["basis"] = els;
  } else {
    j["reason"] = b.reason;
  }
  return j;
}

Outcome task_separability(const Bimodule& sigma, const RunOptions& o) {
  Outcome out;
  FramedBimodule fr = frame(sigma);
  HypothesisReport h = check_hypotheses(fr, o.budget);
  SplitExtension split = is_split_extension(fr.endo.extension);
  out.result["separable"] = h.separability.separable;
  out.result["section"] = h.separability.section ? Json(h.separability.section->transpose().bracketed()) : Json(nullptr);
  out.result["split"] = split.split;
  out.result["retraction"] = split.retraction ? Json(split.retraction->bracketed()) : Json(nullptr);
  out.result["left_free"] = free_json(h.left_free);
  out.result["dual_right_free"] = free_json(h.dual_right_free);
  out.result["flatness"] = h.flatness;
  out.result["summary"] = h.summary;
  CheckReport chain;
  chain.subject = "separability chain";
  ++chain.checked;
  if (h.separability.separable && !split.split) chain.fail("separable implies split", h.summary);
  out.reports.push_back(chain);
  return out;
}

Outcome task_adjunction(const Bimodule& sigma, const RunOptions& o) {
  Outcome out;
  AdjunctionContext ctx = make_adjunction_context(frame(sigma));
  ComoduleSet set = standard_comodule_set(ctx, settings_of(o));
  AdjunctionCertificate cert = verify_adjunction(ctx, set);
  out.result["twist"] = set.g.matrix.bracketed();
  Json pairs = Json::array();
  for (const auto& p : cert.pairs) {
    pairs.push_back({{"y", p.y}, {"x", p.x}, {"dim_comatrix", p.dim_comatrix}, {"dim_sweedler", p.dim_sweedler}});
  }
  out.result["pairs"] = pairs;
  out.reports = cert.reports;
  return out;
}

Outcome task_theorems(const Bimodule& sigma, const RunOptions& o) {
  Outcome out;
  TheoremBundle t = verify_theorems(frame(sigma), settings_of(o));
  out.result["inv_order"] = t.inv.elements.size();
  out.result["inv_abelian"] = t.inv.table.is_commutative();
  out.result["inv"] = describe_all(t.inv.elements);
  out.result["inv_table"] = table_json(t.inv.table);
  out.result["end_order"] = t.endos.elements.size();
  out.result["aut_order"] = t.endos.automorphisms().size();
  out.result["affine_points"] = t.endos.affine_points;
  out.result["end_table"] = table_json(t.endos.table);
  out.result["left_unital"] = t.left_unital.size();
  out.result["right_unital"] = t.right_unital.size();
  Json g = Json::array();
  for (auto i : t.gamma_of_inv) g.push_back(i == kNone ? Json(nullptr) : Json(i));
  out.result["gamma_of_inv"] = g;
  out.result["separable"] = t.hypotheses.separability.separable;
  out.result["split"] = t.split.split;
  out.result["flatness"] = t.hypotheses.flatness;
  out.result["hypotheses"] = t.hypotheses.summary;
  out.reports = t.reports;
  return out;
}

Outcome dispatch(const Workspace& w, const TaskDef& t, const RunOptions& o) {
  const std::string& name = t.args.at(0);
  if (t.kind == "validate") return task_validate(w, name);
  const Bimodule& sigma = w.objects.bimodules.at(name);
  if (t.kind == "coring") return task_coring(sigma, t);
  if (t.kind == "endos") return task_endos(sigma, o);
  if (t.kind == "inv") return task_inv(sigma, o);
  if (t.kind == "gamma") return task_gamma(sigma, o);
  if (t.kind == "hat") return task_hat(sigma, o);
  if (t.kind == "separability") return task_separability(sigma, o);
  if (t.kind == "adjunction") return task_adjunction(sigma, o);
  if (t.kind == "theorems") return task_theorems(sigma, o);
  throw InvalidStructure("unknown task kind " + t.kind);
}

std::int64_t millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

Json run_task(const Workspace& w, const TaskDef& t, const RunOptions& o) {
  auto start = std::chrono::steady_clock::now();
  Json j;
  j["task"] = t.signature();
  j["line"] = t.at.line;
  try {
    Outcome out = dispatch(w, t, o);
    std::size_t checked = 0;
    bool ok = true;
    Json reports = Json::array();
    for (const auto& r : out.reports) {
      checked += r.checked;
      ok = ok && r.ok();
      reports.push_back(report_json(r));
    }
    j["status"] = ok ? "pass" : "fail";
    j["checked"] = checked;
    j["result"] = out.result;
    j["reports"] = reports;
  } catch (const BudgetExceeded& e) {
    j["status"] = "budget-exceeded";
    j["reason"] = e.what();
    j["required"] = e.required();
    j["budget"] = e.budget();
  } catch (const InfiniteField& e) {
    j["status"] = "unverified";
    j["reason"] = e.what();
  } catch (const Error& e) {
    j["status"] = "fail";
    j["error"] = error_name(e);
    j["reason"] = e.what();
  }
  if (o.timing) j["elapsed_ms"] = millis_since(start);
  return j;
}

int exit_code_for(const Json& report) {
  bool budget = false;
  for (const auto& t : report.at("tasks")) {
    const std::string s = t.at("status");
    if (s == "fail") return kFail;
    if (s == "budget-exceeded") budget = true;
  }
  if (report.contains("seed_check")) {
    for (const auto& s : report.at("seed_check"))
      if (s.at("status") != "pass") return kFail;
  }
  return budget ? kBudget : kPass;
}

RunResult run(const Workspace& w, const RunOptions& o) {
  auto start = std::chrono::steady_clock::now();
  RunResult out;
  Json& r = out.report;
  r["format"] = 1;
  r["tool"] = "comatrix";
  r["field"] = w.field ? Json(w.field->name()) : Json(nullptr);
  r["budget"] = o.budget;
  r["workers"] = o.workers;
  Json tasks = Json::array();
  std::size_t skipped = 0;
  const std::vector<TaskDef> defs = w.tasks();
  for (std::size_t i = 0; i < defs.size(); ++i) {
    Json t = run_task(w, defs[i], o);
    const std::string status = t.at("status");
    tasks.push_back(std::move(t));
    if (o.fail_fast && status != "pass" && status != "unverified") {
      skipped = defs.size() - i - 1;
      break;
    }
  }
  r["tasks"] = tasks;
  if (o.seed_check) {
    Json seeds = Json::array();
    for (const auto& fx : all_fixtures()) {
      CheckReport c = reseed_check(fx);
      Json s = report_json(c);
      s["fixture"] = fx.name;
      s["status"] = c.ok() ? "pass" : "fail";
      seeds.push_back(s);
    }
    r["seed_check"] = seeds;
  }
  Json summary;
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& t : r["tasks"]) {
    const std::string s = t.at("status");
    counts[s == "pass" ? 0 : s == "fail" ? 1 : s == "unverified" ? 2 : 3]++;
  }
  out.exit_code = exit_code_for(r);
  summary["tasks"] = defs.size();
  summary["pass"] = counts[0];
  summary["fail"] = counts[1];
  summary["unverified"] = counts[2];
  summary["budget_exceeded"] = counts[3];
  summary["skipped"] = skipped;
  summary["exit_code"] = out.exit_code;
  r["summary"] = summary;
  if (o.timing) r["elapsed_ms"] = millis_since(start);
  return out;
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

bool all_scalars(const Json& a) {
  for (const auto& x : a)
    if (x.is_structured()) return false;
  return true;
}

std::string inline_array(const Json& a) {
  std::string out = "[";
  bool first = true;
  for (const auto& x : a) {
    out += (first ? "" : ", ") + scalar_text(x);
    first = false;
  }
  return out + "]";
}

void render_node(const Json& node, std::size_t indent, std::ostringstream& os);

void render_value(const std::string& head, const Json& v, std::size_t indent, std::ostringstream& os) {
  const std::string pad(indent, ' ');
  if (!v.is_structured()) {
    os << pad << head << scalar_text(v) << "\n";
  } else if (v.empty()) {
    os << pad << head << (v.is_array() ? "[]" : "{}") << "\n";
  } else if (v.is_array() && all_scalars(v)) {
    os << pad << head << inline_array(v) << "\n";
  } else {
    os << pad << (head.empty() ? "-" : head.substr(0, head.size() - 1)) << "\n";
    render_node(v, indent + 2, os);
  }
}

void render_node(const Json& node, std::size_t indent, std::ostringstream& os) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) render_value(k + ": ", v, indent, os);
  } else {
    for (const auto& v : node) render_value("- ", v, indent, os);
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  render_node(report, 0, os);
  return os.str();
}

}  // namespace comatrix::cli
