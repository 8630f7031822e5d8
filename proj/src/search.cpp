#include "vml/search.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <optional>
#include <sstream>

#include "parallel.hpp"

namespace vml {

std::string to_string(SearchMix mix) {
  switch (mix) {
    case SearchMix::stiefel: return "stiefel";
    case SearchMix::classical_sums: return "classical-sums";
    case SearchMix::both: break;
  }
  return "both";
}

SearchMix search_mix_from_string(const std::string& s) {
  if (s == "stiefel") return SearchMix::stiefel;
  if (s == "classical-sums") return SearchMix::classical_sums;
  if (s == "both") return SearchMix::both;
  throw InputError("unknown mix '" + s + "' (expected stiefel, classical-sums or both)");
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

std::string TrialOutcome::line() const {
  std::ostringstream os;
  os << index << '|' << generator << '|' << n << '|' << rank << '|' << q << '|';
  for (std::size_t k = 0; k < terms.size(); ++k) os << (k ? "," : "") << terms[k];
  os << '|' << (certified ? "certified" : "uncertified") << '|' << (lc_pass ? "lc" : "not-lc") << '|'
     << (ulc_pass ? "ulc" : "not-ulc");
  return os.str();
}

namespace {

void validate(const SearchParams& p) {
  if (p.n_max < 1 || p.n_max > kMaxGround) throw InputError("--n must lie in [1, " + std::to_string(kMaxGround) + "]");
  if (p.r_max < 1) throw InputError("--r must be at least 1");
  if (!(p.density >= 0 && p.density < 1)) throw InputError("--density must lie in [0, 1)");
  if (p.lo > p.hi) throw InputError("empty value range");
  if (p.jobs < 1) throw InputError("--jobs must be at least 1");
}

std::string shape(const char* name, int n, int r) {
  return std::string(name) + "(" + std::to_string(n) + "," + std::to_string(r) + ")";
}

TrialInstance draw_stiefel(const SearchParams& params, Rng& rng) {
  // Uniform over the shapes 1 <= r <= min(n, r_max), 1 <= n <= n_max.
  std::vector<std::pair<int, int>> shapes;
  for (int n = 1; n <= params.n_max; ++n)
    for (int r = 1; r <= std::min(n, params.r_max); ++r) shapes.emplace_back(n, r);
  const auto [n, r] = shapes[rng.uniform_int(0, static_cast<std::int64_t>(shapes.size()) - 1)];
  StiefelParams sp{n, r, params.lo, params.hi, params.density, 100};
  PlueckerVector p = random_stiefel_matroid(sp, rng);
  return {std::move(p), random_q(rng), shape("stiefel", n, r)};
}

std::optional<TrialInstance> draw_classical_sum(const SearchParams& params, Rng& rng) {
  struct Named {
    const char* name;
    int n;
    int r;
  };
  static const Named all[] = {{"fano", 7, 3}, {"vamos", 8, 4}, {"nonpappus", 9, 3}};
  std::vector<Named> fitting;
  for (const Named& c : all)
    if (c.n < params.n_max && c.r <= params.r_max) fitting.push_back(c);
  if (fitting.empty()) return std::nullopt;
  const Named c = fitting[rng.uniform_int(0, static_cast<std::int64_t>(fitting.size()) - 1)];
  const int n2 = static_cast<int>(rng.uniform_int(1, params.n_max - c.n));
  const int cap = std::min(n2, params.r_max - c.r);
  const int r2 = static_cast<int>(rng.uniform_int(std::min(1, cap), cap));
  StiefelParams sp{n2, r2, params.lo, params.hi, params.density, 100};
  PlueckerVector s = random_stiefel_matroid(sp, rng);
  PlueckerVector p = direct_sum(classical_matroid(c.name), s);
  return TrialInstance{std::move(p), random_q(rng), std::string(c.name) + "+" + shape("stiefel", n2, r2)};
}

}  // namespace

TrialInstance draw_trial(const SearchParams& params, std::uint64_t index) {
  Rng rng({params.seed, index});
  bool classical = params.mix == SearchMix::classical_sums;
  if (params.mix == SearchMix::both) classical = rng.uniform_int(0, 1) == 1;
  if (classical)
    if (auto t = draw_classical_sum(params, rng)) return std::move(*t);
  return draw_stiefel(params, rng);
}

TrialOutcome run_trial(const SearchParams& params, std::uint64_t index, Json* violation, Json* theorem_violation) {
  TrialInstance inst = draw_trial(params, index);
  const PlueckerVector& p = inst.matroid;
  TrialOutcome out;
  out.index = index;
  out.generator = inst.generator;
  out.n = p.ground().size();
  out.rank = p.rank();
  out.q = inst.q.to_string();

  auto document = [&](const char* finding) {
    Json doc = Json::object();
    doc["format_version"] = kFormatVersion;
    doc["type"] = "report";
    doc["finding"] = finding;
    doc["trial"] = index;
    doc["seed"] = params.seed;
    doc["stream"] = index;
    doc["generator"] = inst.generator;
    doc["density"] = params.density;
    doc["q"] = out.q;
    doc["N"] = out.n;
    doc["instance"] = to_json(p);
    return doc;
  };

  const CheckReport cert = check_valuated_exchange(p);
  if (!cert) {
    out.certified = false;
    out.lc_pass = out.ulc_pass = false;
    if (theorem_violation) {
      *theorem_violation = document("uncertified instance");
      (*theorem_violation)["check"] = check_report_to_json(cert, {{&p.ground()}, &p.ground()});
    }
    out.digest = sha256_hex(out.line());
    return out;
  }

  const PositiveSequence seq = ik_matroid(p, inst.q);
  for (std::size_t k = 0; k < seq.size(); ++k) out.terms.push_back(seq.term_string(k));
  const CheckReport lc = check_strengthened_lc(seq);
  const CheckReport ulc = check_ulc(seq, out.n);
  out.lc_pass = lc.pass;
  out.ulc_pass = ulc.pass;
  if (!lc && theorem_violation) {
    *theorem_violation = document("theorem violation");
    (*theorem_violation)["sequence"] = to_json(seq);
    (*theorem_violation)["check"] = check_report_to_json(lc, {});
  }
  if (!ulc && violation) {
    *violation = document("conjecture counterexample candidate");
    (*violation)["sequence"] = to_json(seq);
    (*violation)["check"] = check_report_to_json(ulc, {});
  }
  out.digest = sha256_hex(out.line());
  return out;
}

SearchReport run_search(const SearchParams& params) {
  validate(params);
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.params = params;
  report.outcomes.resize(params.trials);
  std::vector<Json> violations(params.trials);
  std::vector<Json> theorem(params.trials);
  detail::parallel_for(params.trials, params.jobs, [&](std::size_t i) {
    report.outcomes[i] = run_trial(params, i, &violations[i], &theorem[i]);
  });
  std::string all;
  for (std::size_t i = 0; i < params.trials; ++i) {
    all += report.outcomes[i].line();
    all += '\n';
    if (!violations[i].is_null()) report.violations.push_back(std::move(violations[i]));
    if (!theorem[i].is_null()) report.theorem_violations.push_back(std::move(theorem[i]));
  }
  report.digest = sha256_hex(all);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json to_json(const SearchReport& report, bool trial_digests) {
  const SearchParams& p = report.params;
  Json doc = Json::object();
  doc["format_version"] = kFormatVersion;
  doc["type"] = "report";
  doc["command"] = "search-ulc";
  doc["trials"] = p.trials;
  doc["seed"] = p.seed;
  doc["params"] = {{"n_max", p.n_max},     {"r_max", p.r_max},
                   {"density", p.density}, {"value_range", {p.lo, p.hi}},
                   {"mix", to_string(p.mix)},
                   {"q_policy", "random p/s with 1 <= p < s <= 1000, one per trial"},
                   {"N_policy", "N = |E|"}};
  std::map<std::string, std::uint64_t> generators;
  for (const TrialOutcome& t : report.outcomes) {
    const std::string g = t.generator.substr(0, t.generator.find('('));
    ++generators[g];
  }
  doc["generators"] = generators;
  doc["violations"] = report.violations;
  doc["theorem_violations"] = report.theorem_violations;
  doc["digest"] = report.digest;
  if (trial_digests) {
    Json d = Json::array();
    for (const TrialOutcome& t : report.outcomes) d.push_back(t.digest.substr(0, 16));
    doc["trial_digests"] = std::move(d);
  }
  doc["jobs"] = p.jobs;
  doc["wall_time_seconds"] = report.wall_seconds;
  return doc;
}

}  // namespace vml
