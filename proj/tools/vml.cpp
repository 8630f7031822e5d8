// vml: checks, sequences, extensions, lifts, Lorentzian tests and the ULC search.
//
// Exit codes: 0 pass, 1 structural check or theorem failure, 2 input or usage
// error, 3 conjecture counterexample candidate.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "vml/generators.hpp"
#include "vml/io.hpp"
#include "vml/search.hpp"

using namespace vml;

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2, kConjecture = 3 };

struct NumericOpts {
  bool relaxed = false;
  double tol = kDefaultTolerance;
  unsigned jobs = 1;
};

unsigned default_jobs() {
  if (const char* env = std::getenv("VML_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "vml: ignoring invalid VML_JOBS='" << env << "'\n";
  }
  return 1;
}

void add_numeric(CLI::App* cmd, NumericOpts& o) {
  cmd->add_flag("--relaxed", o.relaxed, "Floating-point mode for real valuations or decimal q");
  cmd->add_option("--tol", o.tol, "Relative tolerance in relaxed mode")->capture_default_str();
  cmd->add_option("--jobs,-j", o.jobs, "Worker threads (default $VML_JOBS or 1)");
}

Json report_envelope(const std::string& command) {
  Json doc = Json::object();
  doc["format_version"] = kFormatVersion;
  doc["type"] = "report";
  doc["command"] = command;
  return doc;
}

void emit(const Json& doc, const std::string& out) { write_json_file(out.empty() ? "-" : out, doc); }

void merge(Json& into, const Json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

CheckOptions check_options(const NumericOpts& o) { return {o.tol, o.jobs}; }

std::string resolve_structure(const Json& doc, const std::string& requested) {
  const std::string type = document_type(doc);
  std::string expected;
  if (requested == "matroid") expected = "valuated_matroid";
  else if (requested == "mconvex") expected = "m_convex";
  else if (requested == "bimatroid") expected = "bimatroid";
  if (!expected.empty() && expected != type) throw InputError("--structure " + requested + " needs a " + expected + " document, got " + type);
  if (type != "valuated_matroid" && type != "m_convex" && type != "bimatroid")
    throw InputError("cannot check a document of type " + type);
  return type;
}

/// Runs the structure's checker and returns the labelled report.
Json check_document(const Json& doc, const std::string& type, const NumericOpts& o, bool& pass) {
  const CheckOptions opts = check_options(o);
  if (type == "valuated_matroid") {
    const PlueckerVector p = pluecker_from_json(doc);
    const CheckReport r = check_valuated_exchange(p, opts);
    pass = r.pass;
    return check_report_to_json(r, {{&p.ground()}, &p.ground()});
  }
  if (type == "m_convex") {
    const MConvexMap f = mconvex_from_json(doc);
    const CheckReport r = check_m_convex(f, opts);
    pass = r.pass;
    return check_report_to_json(r, {{}, &f.ground()});
  }
  const MinorMap mu = bimatroid_from_json(doc);
  const CheckReport r = check_bimatroid(mu, opts);
  pass = r.pass;
  const GroundSet* el = r.axiom == "2(ii)" ? &mu.cols() : &mu.rows();
  return check_report_to_json(r, {{&mu.rows(), &mu.cols(), &mu.rows(), &mu.cols()}, el});
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

GroundSet new_elements(const std::string& list, int count, const char* prefix) {
  if (!list.empty() && count > 0) throw InputError("give either --new-elements or --count");
  if (!list.empty()) return GroundSet(split_labels(list));
  if (count <= 0) throw InputError("need --new-elements LIST or --count N with N >= 1");
  return GroundSet::numbered(count, prefix);
}

// ---------------------------------------------------------------- commands

int cmd_check(const std::string& file, const std::string& structure, const NumericOpts& o, const std::string& out) {
  const Json doc = read_json_file(file);
  const std::string type = resolve_structure(doc, structure);
  bool pass = false;
  Json report = report_envelope("check");
  report["structure"] = type;
  merge(report, check_document(doc, type, o, pass));
  report["verdict"] = pass ? "pass" : "structural failure";
  emit(report, out);
  return pass ? kPass : kFail;
}

int cmd_seq(const std::string& file, const std::string& kind, const std::string& q_text, const std::string& check,
            std::optional<int> n_opt, const NumericOpts& o, const std::string& out) {
  const Json doc = read_json_file(file);
  const std::string type = document_type(doc);
  const QScalar q = QScalar::parse(q_text, o.relaxed ? NumericMode::relaxed : NumericMode::exact);
  Json report = report_envelope("seq");
  report["structure"] = type;

  std::optional<PositiveSequence> seq;
  bool structure_ok = true;
  Json structure_report;
  if (kind == "ik") {
    if (type == "valuated_matroid") {
      const PlueckerVector p = pluecker_from_json(doc);
      const CheckReport c = check_valuated_exchange(p, check_options(o));
      structure_ok = c.pass;
      structure_report = check_report_to_json(c, {{&p.ground()}, &p.ground()});
      if (structure_ok) seq = ik_matroid(p, q);
    } else if (type == "m_convex") {
      const MConvexMap f = mconvex_from_json(doc);
      const CheckReport c = check_m_convex(f, check_options(o));
      structure_ok = c.pass;
      structure_report = check_report_to_json(c, {{}, &f.ground()});
      if (structure_ok) seq = ik_polymatroid(f, q);
    } else {
      throw InputError("--kind ik needs a valuated_matroid or m_convex document");
    }
  } else {
    if (type != "bimatroid") throw InputError("--kind rk needs a bimatroid document");
    const MinorMap mu = bimatroid_from_json(doc);
    bool pass = false;
    structure_report = check_document(doc, type, o, pass);
    structure_ok = pass;
    if (structure_ok) seq = rk_bimatroid(mu, q);
  }
  report["structure_check"] = structure_report;
  if (!structure_ok) {
    report["verdict"] = "structural failure";
    emit(report, out);
    return kFail;
  }
  const int n = n_opt ? *n_opt : seq->context().ground.value_or(static_cast<int>(seq->size()) - 1);
  report["sequence"] = to_json(*seq);
  report["check"] = check;
  CheckReport r;
  if (check == "lc") {
    r = check_strengthened_lc(*seq, o.tol);
  } else {
    report["N"] = n;
    r = check_ulc(*seq, n, o.tol);
  }
  merge(report, check_report_to_json(r, {}));
  const SequenceKind sk = seq->context().kind;
  const bool probe = !r.pass && is_conjecture_probe(sk, r.axiom);
  if (r.pass) report["verdict"] = "pass";
  else if (probe) report["verdict"] = "conjecture counterexample candidate";
  else if (is_asserted(sk, r.axiom)) report["verdict"] = "theorem violation";
  else report["verdict"] = "fail (not asserted for this structure)";
  emit(report, out);
  if (r.pass) return kPass;
  return probe ? kConjecture : kFail;
}

int cmd_extend(const std::string& file, const std::string& list, int count, std::string mode, bool verify,
               const NumericOpts& o, const std::string& out) {
  const Json doc = read_json_file(file);
  const std::string type = document_type(doc);
  if (mode.empty()) mode = type == "m_convex" ? "polymatroid" : "matroid";
  Json result;
  if (mode == "matroid") {
    const PlueckerVector p = pluecker_from_json(doc);
    result = to_json(generic_extension(p, new_elements(list, count, "x")));
  } else if (mode == "polymatroid") {
    const MConvexMap f = mconvex_from_json(doc);
    result = to_json(generic_extension_poly(f, new_elements(list, count, "x")));
  } else if (mode == "bimatroid-free") {
    const PlueckerVector p = pluecker_from_json(doc);
    const GroundSet rows = new_elements(list, count, "e");
    if (rows.size() < p.rank())
      throw InputError("bimatroid-free needs at least rank = " + std::to_string(p.rank()) + " new elements");
    result = to_json(free_extension_bimatroid(normalize(p), rows));
  } else {
    throw InputError("unknown --mode '" + mode + "'");
  }
  if (verify) {
    bool pass = false;
    const Json check = check_document(result, document_type(result), o, pass);
    if (!pass) {
      Json report = report_envelope("extend");
      report["verdict"] = "structural failure";
      report["document"] = result;
      merge(report, check);
      emit(report, out);
      return kFail;
    }
  }
  emit(result, out);
  return kPass;
}

int cmd_lift(const std::string& file, bool verify, const NumericOpts& o, const std::string& out) {
  const MConvexMap f = mconvex_from_json(read_json_file(file));
  const PlueckerVector lifted = multisymmetric_lift(f, canonical_fiber_map(f));
  const Json result = to_json(lifted);
  if (verify && !check_valuated_exchange(lifted, check_options(o))) {
    bool pass = false;
    Json report = report_envelope("lift");
    merge(report, check_document(result, "valuated_matroid", o, pass));
    report["verdict"] = "structural failure";
    emit(report, out);
    return kFail;
  }
  emit(result, out);
  return kPass;
}

int cmd_lorentzian(const std::string& file, const std::string& q_text, bool boundary, const std::string& ygroup,
                   const NumericOpts& o, const std::string& out) {
  const Json doc = read_json_file(file);
  const std::string type = document_type(doc);
  const QScalar q = QScalar::parse(q_text);
  std::optional<MultiHomPoly> poly;
  if (type == "polynomial") poly = polynomial_from_json(doc);
  else if (type == "valuated_matroid") poly = generating_poly_matroid(pluecker_from_json(doc), q);
  else if (type == "m_convex") poly = generating_poly_mconvex(mconvex_from_json(doc), q);
  else throw InputError("lorentzian needs a polynomial, valuated_matroid or m_convex document");

  Json report = report_envelope("lorentzian");
  report["polynomial"] = to_json(*poly);
  const NumericMode mode = o.relaxed ? NumericMode::relaxed : NumericMode::exact;
  const bool strict = is_strictly_lorentzian(*poly, mode, o.tol);
  report["strictly_lorentzian"] = strict;
  bool pass = strict;
  if (boundary) {
    const BoundaryEvidence ev = boundary_consistency(*poly);
    report["boundary"] = {{"consistent", ev.consistent}, {"epsilons", ev.epsilons}, {"strict", ev.strict}};
    pass = pass || ev.consistent;
  }
  if (!ygroup.empty()) {
    Subset y;
    for (const std::string& label : split_labels(ygroup)) {
      if (!poly->vars().contains(label)) throw InputError("unknown variable '" + label + "'");
      y = y.with(poly->vars().index_of(label));
    }
    const Subset x = Subset::full(poly->vars().size()) - y;
    const std::vector<Rational> coeffs = specialize_bivariate(*poly, x, y);
    Json c = Json::array();
    for (const Rational& a : coeffs) c.push_back(rational_to_json(a));
    report["bivariate"] = c;
    const CheckReport r = ulc_of_bivariate(coeffs, poly->degree());
    report["bivariate_ulc"] = check_report_to_json(r, {});
    pass = pass && r.pass;
  }
  report["verdict"] = pass ? "pass" : "fail";
  emit(report, out);
  return pass ? kPass : kFail;
}

int cmd_search(SearchParams params, const std::string& out, const std::string& save_dir, bool trial_digests) {
  const SearchReport report = run_search(params);
  emit(to_json(report, trial_digests), out);
  if (!save_dir.empty() && (!report.violations.empty() || !report.theorem_violations.empty())) {
    std::filesystem::create_directories(save_dir);
    for (const Json& v : report.violations)
      write_json_file((std::filesystem::path(save_dir) / ("candidate-" + std::to_string(v["trial"].get<std::uint64_t>()) + ".json")).string(), v);
    for (const Json& v : report.theorem_violations)
      write_json_file((std::filesystem::path(save_dir) / ("violation-" + std::to_string(v["trial"].get<std::uint64_t>()) + ".json")).string(), v);
  }
  std::cerr << "search-ulc: " << params.trials << " trials, " << report.violations.size() << " ULC candidates, "
            << report.theorem_violations.size() << " theorem violations, digest " << report.digest << ", "
            << report.wall_seconds << " s\n";
  if (!report.theorem_violations.empty()) return kFail;
  return report.violations.empty() ? kPass : kConjecture;
}

int cmd_gen(const std::string& name, const StiefelParams& sp, const SeparableParams& sep, RngSpec spec,
            const std::string& out) {
  if (name == "stiefel") {
    emit(to_json(random_stiefel_matroid(sp, spec)), out);
  } else if (name == "stiefel-bimatroid") {
    Rng rng(spec);
    emit(to_json(stiefel_bimatroid(random_tropical_matrix(sp.r, sp.n, sp.lo, sp.hi, sp.density, rng))), out);
  } else if (name == "separable") {
    Rng rng(spec);
    emit(to_json(random_separable_mconvex(sep, rng)), out);
  } else if (name == "q") {
    Json doc = Json::object();
    doc["q"] = random_q(spec).to_string();
    emit(doc, out);
  } else {
    emit(to_json(classical_matroid(name)), out);
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Valuated matroids, M-convex functions and valuated bimatroids"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out;
  app.add_option("-o,--output", out, "Write the resulting document here instead of stdout");

  NumericOpts check_o, seq_o, ext_o, lift_o, lor_o;
  for (NumericOpts* o : {&check_o, &seq_o, &ext_o, &lift_o, &lor_o}) o->jobs = default_jobs();

  auto* check = app.add_subcommand("check", "Check the axioms of a structure");
  std::string check_file = "-", structure = "auto";
  check->add_option("file", check_file, "Document path, - for stdin");
  check->add_option("--structure", structure)->check(CLI::IsMember({"auto", "matroid", "mconvex", "bimatroid"}));
  add_numeric(check, check_o);

  auto* seq = app.add_subcommand("seq", "Compute I_k or R_k and check log-concavity");
  std::string seq_file = "-", kind = "ik", q_text = "1", seq_check = "lc";
  std::optional<int> seq_n;
  seq->add_option("file", seq_file, "Document path, - for stdin");
  seq->add_option("--kind", kind)->check(CLI::IsMember({"ik", "rk"}))->capture_default_str();
  seq->add_option("--q", q_text, "q as p/s")->capture_default_str();
  seq->add_option("--check", seq_check)->check(CLI::IsMember({"lc", "ulc"}))->capture_default_str();
  seq->add_option("--N", seq_n, "ULC parameter (default |E|, or min(|E|,|F|) for rk)");
  add_numeric(seq, seq_o);

  auto* extend = app.add_subcommand("extend", "Generic or free extensions");
  std::string ext_file = "-", ext_list, ext_mode;
  int ext_count = 0;
  bool ext_verify = false;
  extend->add_option("file", ext_file, "Document path, - for stdin");
  extend->add_option("--new-elements", ext_list, "Comma-separated labels of the new elements");
  extend->add_option("--count", ext_count, "Number of new elements, labelled automatically");
  extend->add_option("--mode", ext_mode)->check(CLI::IsMember({"matroid", "polymatroid", "bimatroid-free"}));
  extend->add_flag("--verify", ext_verify, "Re-check the result");
  add_numeric(extend, ext_o);

  auto* search = app.add_subcommand("search-ulc", "Seeded search for ULC counterexamples");
  SearchParams sp;
  sp.jobs = default_jobs();
  std::string mix = "both", save_dir;
  bool no_trial_digests = false;
  search->add_option("--trials", sp.trials)->capture_default_str();
  search->add_option("--n", sp.n_max, "Largest ground set")->capture_default_str();
  search->add_option("--r", sp.r_max, "Largest rank")->capture_default_str();
  search->add_option("--density", sp.density, "Probability of an infinite matrix entry")->capture_default_str();
  search->add_option("--lo", sp.lo, "Smallest matrix entry")->capture_default_str();
  search->add_option("--hi", sp.hi, "Largest matrix entry")->capture_default_str();
  search->add_option("--seed", sp.seed)->capture_default_str();
  search->add_option("--jobs,-j", sp.jobs, "Worker threads (default $VML_JOBS or 1)");
  search->add_option("--mix", mix)->check(CLI::IsMember({"stiefel", "classical-sums", "both"}))->capture_default_str();
  search->add_option("--save-dir", save_dir, "Also write each finding to its own file here");
  search->add_flag("--no-trial-digests", no_trial_digests, "Omit the per-trial digest list");

  auto* gen = app.add_subcommand("gen", "Emit a classical or random instance");
  std::string gen_name;
  StiefelParams gsp;
  SeparableParams gsep;
  RngSpec grng;
  gen->add_option("name", gen_name, "fano, vamos, nonpappus, uniform(n,r), stiefel, stiefel-bimatroid, separable, q")->required();
  gen->add_option("--n", gsp.n)->capture_default_str();
  gen->add_option("--r", gsp.r)->capture_default_str();
  gen->add_option("--lo", gsp.lo)->capture_default_str();
  gen->add_option("--hi", gsp.hi)->capture_default_str();
  gen->add_option("--density", gsp.density)->capture_default_str();
  gen->add_option("--seed", grng.seed)->capture_default_str();
  gen->add_option("--stream", grng.stream)->capture_default_str();

  auto* lift = app.add_subcommand("lift", "Multisymmetric lift of an M-convex function");
  std::string lift_file = "-";
  bool lift_verify = false;
  lift->add_option("file", lift_file, "Document path, - for stdin");
  lift->add_flag("--verify", lift_verify, "Check the lift with the exchange checker");
  add_numeric(lift, lift_o);

  auto* lor = app.add_subcommand("lorentzian", "Strict Lorentzian test and bivariate ULC");
  std::string lor_file = "-", lor_q = "1", lor_y;
  bool lor_boundary = false;
  lor->add_option("file", lor_file, "polynomial, valuated_matroid or m_convex document");
  lor->add_option("--q", lor_q, "q for generating polynomials")->capture_default_str();
  lor->add_flag("--boundary", lor_boundary, "Also test p + eps*(sum w)^d for eps = 1e-1 .. 1e-8");
  lor->add_option("--y", lor_y, "Comma-separated variables set to y for the bivariate test");
  add_numeric(lor, lor_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*check) return cmd_check(check_file, structure, check_o, out);
    if (*seq) return cmd_seq(seq_file, kind, q_text, seq_check, seq_n, seq_o, out);
    if (*extend) return cmd_extend(ext_file, ext_list, ext_count, ext_mode, ext_verify, ext_o, out);
    if (*search) {
      sp.mix = search_mix_from_string(mix);
      return cmd_search(sp, out, save_dir, !no_trial_digests);
    }
    if (*gen) {
      gsep.n = gsp.n;
      gsep.r = gsp.r;
      return cmd_gen(gen_name, gsp, gsep, grng, out);
    }
    if (*lift) return cmd_lift(lift_file, lift_verify, lift_o, out);
    if (*lor) return cmd_lorentzian(lor_file, lor_q, lor_boundary, lor_y, lor_o, out);
  } catch (const ModeError& e) {
    std::cerr << "vml: " << e.what() << " (rerun with --relaxed to use floating-point mode)\n";
    return kInput;
  } catch (const InputError& e) {
    std::cerr << "vml: " << e.what() << "\n";
    return kInput;
  } catch (const GenerationError& e) {
    std::cerr << "vml: " << e.what() << "\n";
    return kInput;
  } catch (const Json::exception& e) {
    std::cerr << "vml: malformed document: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
