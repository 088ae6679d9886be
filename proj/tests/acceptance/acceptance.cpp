// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "comatrix/adjunction.hpp"
#include "comatrix/fixtures.hpp"
#include "comatrix/masuoka.hpp"
#include "runner.hpp"
#include "workspace.hpp"

using namespace comatrix;

namespace {

const std::string kFixtureDir = COMATRIX_FIXTURE_DIR;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      notes.push_back(what);
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

std::string joined(const std::ostringstream& parts) {
  std::string s = parts.str();
  if (s.size() >= 2) s.resize(s.size() - 2);
  return s;
}

const CheckReport* report_named(const std::vector<CheckReport>& reports, const std::string& subject) {
  for (const auto& r : reports)
    if (r.subject == subject) return &r;
  return nullptr;
}

void require_report(Outcome& o, const std::vector<CheckReport>& reports, const std::string& subject,
                    const std::string& where) {
  const CheckReport* r = report_named(reports, subject);
  if (!r) {
    o.require(false, where + ": no '" + subject + "' report");
    return;
  }
  o.require(r->checked > 0, where + ": '" + subject + "' checked nothing");
  o.require(r->ok(), where + ": " + subject + ": " + r->summary());
}

// verify_theorems is shared by criteria 5 to 10.
struct TheoremRun {
  Fixture fixture;
  TheoremBundle bundle;
  double seconds = 0;
};

const std::vector<TheoremRun>& theorem_runs() {
  static const std::vector<TheoremRun> runs = [] {
    std::vector<TheoremRun> out;
    for (auto& fx : all_fixtures()) {
      auto t0 = std::chrono::steady_clock::now();
      TheoremBundle b = verify_theorems(fx.framed(), EnumerationSettings{1'000'000, 1});
      out.push_back({fx, std::move(b), seconds_since(t0)});
    }
    return out;
  }();
  return runs;
}

Outcome coring_axioms() {
  Outcome o;
  std::ostringstream detail;
  auto timed = [&](const std::string& name, const std::function<CoringPtr()>& build) {
    auto t0 = std::chrono::steady_clock::now();
    CoringPtr c = build();
    CheckReport r = check_coring_axioms(*c);
    double s = seconds_since(t0);
    o.require(r.ok() && r.checked > 0, name + ": " + r.summary());
    o.require(s < 1.0, name + " took " + fmt_seconds(s));
    detail << name << " " << r.checked << " identities in " << fmt_seconds(s) << "; ";
  };
  for (const auto& fx : all_fixtures()) {
    timed(fx.name + " comatrix", [&] { return build_comatrix_coring(fx.framed()).coring; });
  }
  Fixture sw = fixture_ex_sweedler();
  timed("EX-SWEEDLER Sweedler", [&] { return build_sweedler_coring(sw.framed().endo.extension).coring; });
  if (o.pass) o.notes.push_back(joined(detail));
  return o;
}

Outcome dual_basis_independence() {
  Outcome o;
  Fixture fx = fixture_ex_free();
  const Field& f = fx.field();
  DualModule dual = right_dual(fx.sigma);
  DualBasis greedy = compute_dual_basis(fx.sigma, dual);
  DualBasis other = dual_basis_from_generators(
      fx.sigma, dual, {Matrix::column(f, {1, 1}), Matrix::column(f, {0, 1}), Matrix::column(f, {1, 0})});
  o.require(check_dual_basis(fx.sigma, dual, other).ok(), "second dual basis invalid");
  o.require(!(greedy.elements == other.elements), "dual bases coincide");
  ComatrixCoring a = build_comatrix_coring(frame(fx.sigma, greedy));
  ComatrixCoring b = build_comatrix_coring(frame(fx.sigma, other));
  o.require(a.coring->comult == b.coring->comult, "comultiplications differ");
  o.require(a.coring->counit == b.coring->counit, "counits differ");
  if (o.pass)
    o.notes.push_back("bases of size " + std::to_string(greedy.size()) + " and " + std::to_string(other.size()));
  return o;
}

Outcome left_comatrix_iso() {
  Outcome o;
  Fixture fx = fixture_ex_free();
  LeftComatrixCoring lc = build_left_comatrix_coring(fx.sigma);
  CheckReport axioms = check_coring_axioms(*lc.coring);
  o.require(axioms.ok(), "left comatrix coring: " + axioms.summary());
  CheckReport r = check_coring_morphism(lc.iso);
  o.require(r.ok(), "iso: " + r.summary());
  o.require(inverse(lc.iso.matrix).has_value(), "iso not bijective");
  if (o.pass) o.notes.push_back("EX-FREE, dim " + std::to_string(lc.coring->dim()));
  return o;
}

Outcome adjunction() {
  Outcome o;
  AdjunctionContext ctx = make_adjunction_context(fixture_ex_sweedler().framed());
  ComoduleSet set = standard_comodule_set(ctx);
  std::set<std::string> names;
  for (const auto& n : set.sweedler_side) names.insert(n.name);
  for (const auto& n : set.comatrix_side) names.insert(n.name);
  for (const char* required : {"S", "S_hat(g)", "Sigma", "Sigma_g", "0"})
    o.require(names.count(required) == 1, std::string("comodule set lacks ") + required);
  o.require(!set.g.matrix.is_identity(), "g is the identity");
  AdjunctionCertificate cert = verify_adjunction(ctx, set);
  for (const char* subject : {"comodules", "canonical isomorphisms", "adjunction bijection", "naturality"})
    require_report(o, cert.reports, subject, "EX-SWEEDLER");
  o.require(cert.ok(), "certificate not ok");
  for (const auto& p : cert.pairs)
    o.require(p.dim_comatrix == p.dim_sweedler, p.y + ", " + p.x + ": dimensions differ");
  if (o.pass) o.notes.push_back(std::to_string(cert.pairs.size()) + " pairs");
  return o;
}

Outcome left_correspondence() {
  Outcome o;
  std::ostringstream detail;
  for (const auto& run : theorem_runs()) {
    const auto& b = run.bundle;
    require_report(o, b.reports, "monoid tables", run.fixture.name);
    require_report(o, b.reports, "left correspondence", run.fixture.name);
    o.require(b.left_unital.size() == b.endos.elements.size(), run.fixture.name + ": |End| != |I_l|");
    o.require(run.seconds < 60.0, run.fixture.name + " took " + fmt_seconds(run.seconds));
    detail << run.fixture.name << " |End| = " << b.endos.elements.size() << " in " << fmt_seconds(run.seconds)
           << "; ";
  }
  if (o.pass) o.notes.push_back(joined(detail));
  return o;
}

Outcome right_correspondence() {
  Outcome o;
  for (const auto& run : theorem_runs()) {
    require_report(o, run.bundle.reports, "right correspondence", run.fixture.name);
    require_report(o, run.bundle.reports, "opposite identification", run.fixture.name);
    o.require(run.bundle.right_unital.size() == run.bundle.endos.elements.size(),
              run.fixture.name + ": |End| != |I_r|");
  }
  return o;
}

Outcome group_isomorphism() {
  Outcome o;
  std::ostringstream detail;
  for (const auto& run : theorem_runs()) {
    const Fixture& fx = run.fixture;
    const auto& b = run.bundle;
    require_report(o, b.reports, "group isomorphism", fx.name);
    std::string inv = std::to_string(b.inv.elements.size());
    std::string aut = std::to_string(b.endos.automorphisms().size());
    o.require(inv == fx.expect("inv_order"), fx.name + ": |Inv| = " + inv);
    o.require(aut == fx.expect("aut_order"), fx.name + ": |Aut| = " + aut);
    o.require(run_oracle(fx, "sub_bimodules:inv_order") == fx.expect("inv_order"), fx.name + ": oracle disagrees");
    o.require(run_oracle(fx, "coring_endomorphisms:aut_order") == fx.expect("aut_order"),
              fx.name + ": oracle disagrees");
    if (fx.name == "EX-FREE") o.require(!b.inv.table.is_commutative(), "EX-FREE Inv is abelian");
    detail << fx.name << " |Inv| = " << inv << "; ";
  }
  if (o.pass) o.notes.push_back(joined(detail));
  return o;
}

Outcome inverse_symmetry() {
  Outcome o;
  for (const auto& run : theorem_runs()) {
    require_report(o, run.bundle.reports, "inverse symmetry", run.fixture.name);
    const CheckReport* r = report_named(run.bundle.reports, "inverse symmetry");
    o.require(r && r->checked == run.bundle.endos.automorphisms().size(), run.fixture.name + ": not every automorphism");
  }
  return o;
}

Outcome hat_map() {
  Outcome o;
  for (const auto& run : theorem_runs()) require_report(o, run.bundle.reports, "hat map", run.fixture.name);
  return o;
}

Outcome separability_chain() {
  Outcome o;
  Fixture sep = fixture_ex_sep();
  Separability s = is_separable_bimodule(sep.sigma);
  o.require(s.separable, "EX-SEP not separable");
  o.require(s.section.has_value(), "EX-SEP has no explicit section");
  for (const auto& run : theorem_runs()) {
    require_report(o, run.bundle.reports, "separability chain", run.fixture.name);
    if (run.bundle.hypotheses.separability.separable)
      o.require(run.bundle.split.split, run.fixture.name + ": separable but not split");
  }
  if (o.pass && s.section) o.notes.push_back("section " + s.section->bracketed());
  return o;
}

Outcome negative_controls() {
  Outcome o;
  const Field f2 = Field::prime(2);

  ComatrixCoring c = build_comatrix_coring(fixture_ex_free().framed());
  Matrix bad = c.coring->comult;
  bad.add_to(0, 1, f2.one());
  CheckReport r = check_coring_axioms(*with_structure(*c.coring, bad, c.coring->counit));
  o.require(!r.ok(), "corrupted comultiplication passes");
  o.require(!r.ok() && !r.violations.front().witness.empty(), "violation carries no witness");

  AlgebraPtr dual_numbers = Algebra::create(
      f2, {"1", "x"}, {f2.one(), f2.zero(), f2.zero(), f2.one(), f2.zero(), f2.one(), f2.zero(), f2.zero()},
      Matrix::column(f2, {1, 0}));
  Bimodule point(ground_algebra(f2), dual_numbers, 1, {Matrix::identity(f2, 1)},
                 {Matrix::identity(f2, 1), Matrix(f2, 1, 1)});
  bool threw = false;
  try {
    frame(point);
  } catch (const NotProjective&) {
    threw = true;
  }
  o.require(threw, "non-projective module accepted");

  FramedBimodule fr = fixture_ex_free().framed();
  o.require(!is_invertible(fr.endo, full_bimodule(fr.endo)), "full bimodule reported invertible");
  FramedBimodule frs = fixture_ex_sweedler().framed();
  for (const auto& i : enumerate_sub_bimodules(frs.endo)) {
    bool invertible = is_invertible(frs.endo, i);
    bool expected = product(frs.endo, i, inverse_candidate(frs.endo, i)) == unit_bimodule(frs.endo) &&
                    product(frs.endo, inverse_candidate(frs.endo, i), i) == unit_bimodule(frs.endo);
    o.require(invertible == expected, "invertibility of " + describe(i));
  }

  using namespace comatrix::cli;
  RunOptions opts;
  opts.timing = false;
  for (const char* file : {"corrupted_comult.cm", "not_projective.cm"}) {
    RunResult res = run(load_workspace(kFixtureDir + "/negative/" + file), opts);
    o.require(res.exit_code == kFail, std::string(file) + ": exit " + std::to_string(res.exit_code));
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  using namespace comatrix::cli;
  RunOptions opts;
  opts.timing = false;
  auto suite = [&] {
    std::string out;
    for (const char* file : {"ex_free.cm", "ex_sweedler.cm", "ex_sep.cm", "theorems.cm"}) {
      RunResult r = run(load_workspace(kFixtureDir + "/" + file), opts);
      o.require(r.exit_code == kPass, std::string(file) + ": exit " + std::to_string(r.exit_code));
      out += render_json(r.report) + render_text(r.report);
    }
    RunOptions seed = opts;
    seed.seed_check = true;
    RunResult r = run(Workspace{}, seed);
    o.require(r.exit_code == kPass, "seed check failed");
    out += render_json(r.report);
    return out;
  };
  std::string first = suite();
  std::string second = suite();
  o.require(first == second, "reports differ between runs");
  if (o.pass) o.notes.push_back(std::to_string(first.size()) + " bytes identical");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria = {
      {"coring axiom suite", coring_axioms},
      {"dual-basis independence", dual_basis_independence},
      {"left comatrix isomorphism", left_comatrix_iso},
      {"adjunction", adjunction},
      {"left correspondence", left_correspondence},
      {"right correspondence", right_correspondence},
      {"group isomorphism", group_isomorphism},
      {"inverse symmetry", inverse_symmetry},
      {"hat map", hat_map},
      {"separability chain", separability_chain},
      {"negative controls", negative_controls},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::string notes;
    for (const auto& n : o.notes) notes += (notes.empty() ? "" : " | ") + n;
    std::printf("%s %2zu %s%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, notes.empty() ? "" : ": ",
                notes.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
