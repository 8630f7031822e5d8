#include "vml/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace vml {

namespace {

template <class Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) throw InputError(std::string("missing field '") + name + "'");
  return doc.at(name);
}

void expect_type(const Json& doc, const std::string& type) {
  const std::string got = document_type(doc);
  if (got != type) throw InputError("expected a " + type + " document, got " + got);
}

GroundSet ground_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("ground set must be an array of labels");
  std::vector<std::string> labels;
  for (const Json& x : j) {
    if (!x.is_string()) throw InputError("element labels must be strings");
    labels.push_back(x.get<std::string>());
  }
  return GroundSet(std::move(labels));
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

MultiIndex alpha_from_json(const Json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw InputError("alpha must be an array of " + std::to_string(n) + " integers");
  std::vector<int> a;
  for (const Json& x : j) {
    const int v = int_from_json(x, "alpha entry");
    if (v < 0) throw InputError("alpha entries must be nonnegative");
    a.push_back(v);
  }
  return MultiIndex(std::move(a));
}

Json alpha_to_json(const MultiIndex& a) { return Json(a.entries()); }

std::string double_text(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json envelope(const char* type) {
  Json doc = Json::object();
  doc["format_version"] = kFormatVersion;
  doc["type"] = type;
  return doc;
}

}  // namespace

Json rational_to_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
  return Json(r.get_str());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<std::int64_t>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected an exact rational (integer or \"p/s\" string)");
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return parse_json(text);
}

void write_json_file(const std::string& path, const Json& doc) {
  if (path == "-") {
    std::cout << dump_document(doc);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << dump_document(doc);
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

std::string document_type(const Json& doc) {
  if (!doc.is_object()) throw InputError("document must be a JSON object");
  const Json& v = field(doc, "format_version");
  if (!v.is_number_integer() || v.get<int>() != kFormatVersion)
    throw InputError("unsupported format_version (expected " + std::to_string(kFormatVersion) + ")");
  const Json& t = field(doc, "type");
  if (!t.is_string()) throw InputError("type must be a string");
  return t.get<std::string>();
}

Json ext_val_to_json(const ExtVal& v) {
  if (v.is_inf()) return "inf";
  if (v.is_integer()) return v.integer();
  return double_text(v.to_double());
}

ExtVal ext_val_from_json(const Json& j) {
  if (j.is_number_integer()) return ExtVal::finite(j.get<std::int64_t>());
  if (j.is_number_float()) return ExtVal::real(j.get<double>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return ExtVal::inf();
    double d = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), d);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(d))
      throw InputError("bad value '" + s + "'");
    return ExtVal::real(d);
  }
  throw InputError("value must be an integer, \"inf\" or a decimal string");
}

Json subset_to_json(const GroundSet& ground, Subset s) {
  Json out = Json::array();
  for (int i : s.members()) out.push_back(ground.label(i));
  return out;
}

Subset subset_from_json(const GroundSet& ground, const Json& j) {
  if (!j.is_array()) throw InputError("set must be an array of labels");
  Subset s;
  for (const Json& x : j) {
    if (!x.is_string()) throw InputError("element labels must be strings");
    const std::string label = x.get<std::string>();
    if (!ground.contains(label)) throw InputError("unknown element '" + label + "'");
    const int i = ground.index_of(label);
    if (s.contains(i)) throw InputError("repeated element '" + label + "'");
    s = s.with(i);
  }
  return s;
}

// ---------------------------------------------------------------- structures

Json to_json(const PlueckerVector& p) {
  Json doc = envelope("valuated_matroid");
  doc["ground"] = p.ground().labels();
  doc["rank"] = p.rank();
  Json values = Json::array();
  for (const auto& [s, v] : p.entries()) values.push_back({{"set", subset_to_json(p.ground(), s)}, {"val", ext_val_to_json(v)}});
  doc["values"] = std::move(values);
  return doc;
}

PlueckerVector pluecker_from_json(const Json& doc) {
  expect_type(doc, "valuated_matroid");
  return guarded("valuated_matroid", [&] {
    GroundSet ground = ground_from_json(field(doc, "ground"));
    const int rank = int_from_json(field(doc, "rank"), "rank");
    if (rank < 0 || rank > ground.size()) throw InputError("rank out of range");
    std::vector<std::pair<Subset, ExtVal>> entries;
    for (const Json& e : field(doc, "values")) {
      const Subset s = subset_from_json(ground, field(e, "set"));
      if (s.size() != rank) throw InputError("set size differs from the rank");
      entries.emplace_back(s, ext_val_from_json(field(e, "val")));
    }
    return PlueckerVector(std::move(ground), rank, entries);
  });
}

Json to_json(const MConvexMap& f) {
  Json doc = envelope("m_convex");
  doc["ground"] = f.ground().labels();
  doc["rank"] = f.rank();
  Json values = Json::array();
  for (const auto& [a, v] : f.entries()) values.push_back({{"alpha", alpha_to_json(a)}, {"val", ext_val_to_json(v)}});
  doc["values"] = std::move(values);
  return doc;
}

MConvexMap mconvex_from_json(const Json& doc) {
  expect_type(doc, "m_convex");
  return guarded("m_convex", [&] {
    GroundSet ground = ground_from_json(field(doc, "ground"));
    const int rank = int_from_json(field(doc, "rank"), "rank");
    if (rank < 0) throw InputError("rank must be nonnegative");
    std::vector<std::pair<MultiIndex, ExtVal>> entries;
    for (const Json& e : field(doc, "values"))
      entries.emplace_back(alpha_from_json(field(e, "alpha"), ground.size()), ext_val_from_json(field(e, "val")));
    return MConvexMap(std::move(ground), rank, entries);
  });
}

Json to_json(const MinorMap& mu) {
  Json doc = envelope("bimatroid");
  doc["rows"] = mu.rows().labels();
  doc["cols"] = mu.cols().labels();
  Json values = Json::array();
  const ExtVal empty = mu.value(Subset(), Subset());
  if (!(empty.is_integer() && empty.integer() == 0))
    values.push_back({{"rows", Json::array()}, {"cols", Json::array()}, {"val", ext_val_to_json(empty)}});
  for (const auto& [i, j, v] : mu.entries()) {
    if (i.empty() && j.empty()) continue;
    values.push_back({{"rows", subset_to_json(mu.rows(), i)}, {"cols", subset_to_json(mu.cols(), j)}, {"val", ext_val_to_json(v)}});
  }
  doc["values"] = std::move(values);
  return doc;
}

MinorMap bimatroid_from_json(const Json& doc) {
  expect_type(doc, "bimatroid");
  return guarded("bimatroid", [&] {
    GroundSet rows = ground_from_json(field(doc, "rows"));
    GroundSet cols = ground_from_json(field(doc, "cols"));
    std::vector<MinorMap::Entry> entries;
    for (const Json& e : field(doc, "values")) {
      const Subset i = subset_from_json(rows, field(e, "rows"));
      const Subset j = subset_from_json(cols, field(e, "cols"));
      if (i.size() != j.size()) throw InputError("row and column sets of an entry differ in size");
      entries.emplace_back(i, j, ext_val_from_json(field(e, "val")));
    }
    return MinorMap(std::move(rows), std::move(cols), entries);
  });
}

Json to_json(const MultiHomPoly& poly) {
  Json doc = envelope("polynomial");
  doc["vars"] = poly.vars().labels();
  doc["degree"] = poly.degree();
  Json terms = Json::array();
  // Reverse map order lists monomials lexicographically descending, like
  // enumerate_multi_indices.
  for (auto it = poly.coeffs().rbegin(); it != poly.coeffs().rend(); ++it)
    terms.push_back({{"alpha", alpha_to_json(it->first)}, {"coeff", rational_to_json(it->second)}});
  doc["terms"] = std::move(terms);
  return doc;
}

MultiHomPoly polynomial_from_json(const Json& doc) {
  expect_type(doc, "polynomial");
  return guarded("polynomial", [&] {
    GroundSet vars = ground_from_json(field(doc, "vars"));
    const int degree = int_from_json(field(doc, "degree"), "degree");
    std::map<MultiIndex, Rational> coeffs;
    for (const Json& t : field(doc, "terms")) {
      MultiIndex a = alpha_from_json(field(t, "alpha"), vars.size());
      if (coeffs.contains(a)) throw InputError("repeated monomial " + a.to_string());
      coeffs.emplace(std::move(a), rational_from_json(field(t, "coeff")));
    }
    return MultiHomPoly(std::move(vars), degree, coeffs);
  });
}

Json to_json(const PositiveSequence& seq) {
  Json doc = envelope("sequence");
  doc["kind"] = to_string(seq.context().kind);
  if (!seq.context().q.empty()) doc["q"] = seq.context().q;
  if (seq.context().ground) doc["N"] = *seq.context().ground;
  doc["mode"] = seq.mode() == NumericMode::exact ? "exact" : "relaxed";
  Json terms = Json::array();
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (seq.mode() == NumericMode::exact) terms.push_back(rational_to_json(seq.exact_terms()[k]));
    else terms.push_back(double_text(seq.approx_terms()[k]));
  }
  doc["terms"] = std::move(terms);
  return doc;
}

PositiveSequence sequence_from_json(const Json& doc) {
  expect_type(doc, "sequence");
  return guarded("sequence", [&] {
    SequenceContext ctx;
    ctx.kind = doc.contains("kind") ? sequence_kind_from_string(doc.at("kind").get<std::string>()) : SequenceKind::raw;
    if (doc.contains("q")) ctx.q = doc.at("q").get<std::string>();
    if (doc.contains("N")) ctx.ground = int_from_json(doc.at("N"), "N");
    const std::string mode = doc.contains("mode") ? doc.at("mode").get<std::string>() : "exact";
    const Json& terms = field(doc, "terms");
    if (!terms.is_array()) throw InputError("terms must be an array");
    if (mode == "exact") {
      std::vector<Rational> t;
      for (const Json& x : terms) t.push_back(rational_from_json(x));
      return PositiveSequence::exact(std::move(t), ctx);
    }
    if (mode != "relaxed") throw InputError("mode must be exact or relaxed");
    std::vector<double> t;
    for (const Json& x : terms) {
      if (x.is_number()) t.push_back(x.get<double>());
      else t.push_back(ext_val_from_json(x).to_double());
    }
    return PositiveSequence::relaxed(std::move(t), ctx);
  });
}

Json check_report_to_json(const CheckReport& report, const WitnessLabels& labels) {
  Json out = Json::object();
  out["pass"] = report.pass;
  if (report.pass) return out;
  out["axiom"] = report.axiom;
  out["message"] = report.message;
  Json w = Json::object();
  if (!report.sets.empty()) {
    Json sets = Json::array();
    for (std::size_t i = 0; i < report.sets.size(); ++i) {
      const GroundSet* g = labels.set_grounds.empty()
                               ? nullptr
                               : labels.set_grounds[std::min(i, labels.set_grounds.size() - 1)];
      if (g) sets.push_back(subset_to_json(*g, report.sets[i]));
      else sets.push_back(report.sets[i].members());
    }
    w["sets"] = std::move(sets);
  }
  if (!report.elements.empty()) {
    Json el = Json::array();
    for (int e : report.elements) {
      if (labels.element_ground) el.push_back(labels.element_ground->label(e));
      else el.push_back(e);
    }
    w["elements"] = std::move(el);
  }
  if (!report.indices.empty()) {
    Json idx = Json::array();
    for (const MultiIndex& a : report.indices) idx.push_back(alpha_to_json(a));
    w["indices"] = std::move(idx);
  }
  if (report.k) w["k"] = *report.k;
  if (!report.lhs.empty()) w["lhs"] = report.lhs;
  if (!report.rhs.empty()) w["rhs"] = report.rhs;
  out["witness"] = std::move(w);
  return out;
}

}  // namespace vml
