#include "rigiditykit/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "rigiditykit/error.hpp"
#include "rigiditykit/expr.hpp"

namespace rigiditykit {

namespace {

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorCode::SchemaError, msg); }

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) schema(std::string("expected an object with field '") + key + "'");
  const auto it = obj.find(key);
  if (it == obj.end()) schema(std::string("missing field '") + key + "'");
  return *it;
}

std::uint32_t positive_u32(const Json& j, const char* what) {
  if (!j.is_number_integer()) schema(std::string(what) + " must be an integer");
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v >= 1 && v <= std::numeric_limits<std::uint32_t>::max()) return static_cast<std::uint32_t>(v);
  }
  schema(std::string(what) + " must lie in [1, 2^32 - 1]");
}

Json index_set(const IndexSet& s) {
  Json a = Json::array();
  for (auto i : s) a.push_back(i);
  return a;
}

}  // namespace

Json rat_to_json(const Rat& r) { return r.fraction_str(); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return Rat::parse(j.get<std::string>());
    } catch (const Error& e) {
      schema("bad rational '" + j.get<std::string>() + "'");
    }
  }
  if (j.is_number_unsigned()) return Rat(mpz_class(std::to_string(j.get<std::uint64_t>())), mpz_class(1));
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  schema("rationals must be \"p/q\" strings or integers");
}

Json to_json(const Certificate& cert) {
  Json j;
  j["verdict"] = std::string(to_string(cert.verdict));
  Json checked = Json::array();
  for (const auto& c : cert.checked) checked.push_back(Json{{"name", c.name}, {"passed", c.passed}});
  j["checked"] = checked;
  j["assumptions"] = cert.assumptions;
  Json sums = Json::array();
  for (const auto& e : cert.exponent_sums) {
    sums.push_back(Json{{"sum", rat_to_json(e.sum)}, {"threshold", rat_to_json(e.threshold)}});
  }
  j["exponent_sums"] = sums;
  j["ml_generators"] = cert.ml_generators;
  j["sml_all"] = cert.sml_all;
  j["notes"] = cert.notes;
  if (cert.factoriality) {
    j["factoriality"] = Json{{"d", cert.factoriality->d}, {"pairwise_coprime", cert.factoriality->pairwise_coprime}};
  }
  if (cert.split) {
    j["split"] = Json{{"core", format_poly(cert.split->core)},
                      {"core_variables", cert.split->core_variables},
                      {"free_variables", cert.split->free_variables}};
  }
  return j;
}

Json to_json(const MsReport& r) {
  Json j;
  j["hypotheses_ok"] = r.hypotheses_ok;
  j["failed_hypothesis"] = r.failed_hypothesis ? Json(std::string(to_string(*r.failed_hypothesis))) : Json();
  j["pairwise_coprime"] = r.pairwise_coprime;
  j["max_degree"] = r.max_degree;
  j["bound"] = r.bound;
  j["holds"] = r.holds;
  j["tight"] = r.tight;
  return j;
}

Json to_json(const GenMsReport& r) {
  Json j;
  j["hypotheses_ok"] = r.hypotheses_ok;
  j["failed_hypothesis"] = r.failed_hypothesis ? Json(std::string(to_string(*r.failed_hypothesis))) : Json();
  j["violating_subset"] = r.violating_subset ? index_set(*r.violating_subset) : Json();
  j["n"] = r.n;
  j["root_counts"] = r.root_counts;
  j["max_degree"] = r.max_degree;
  j["bound"] = r.bound;
  j["holds"] = r.holds;
  return j;
}

Json to_json(const ShadowReport& r) {
  Json j;
  j["verdict"] = std::string(to_string(r.verdict));
  j["failed_hypothesis"] = r.failed_hypothesis ? Json(std::string(to_string(*r.failed_hypothesis))) : Json();
  j["exponent_sum"] = rat_to_json(r.exponent_sum);
  j["threshold"] = rat_to_json(r.threshold);
  j["some_base_nonconstant"] = r.some_base_nonconstant;
  const auto& c = r.chain;
  j["chain"] = Json{{"max_term_degree", c.max_term_degree},
                    {"sum_root_counts_terms", c.sum_root_counts_terms},
                    {"sum_root_counts_bases", c.sum_root_counts_bases},
                    {"sum_base_degrees", c.sum_base_degrees},
                    {"degree_times_exponent_sum", rat_to_json(c.degree_times_exponent_sum)},
                    {"multiplier", c.multiplier},
                    {"gms_bound", c.gms_bound},
                    {"gms_step_holds", c.gms_step_holds},
                    {"final_product", rat_to_json(c.final_product)}};
  return j;
}

std::string emit_certificate(const Certificate& cert) { return to_json(cert).dump(2) + "\n"; }

std::vector<TermDecomp> terms_from_json(const Json& j, std::string* variable) {
  if (!j.is_array()) schema("terms file must be a JSON array");
  std::optional<std::string> var;
  std::vector<TermDecomp> out;
  for (const auto& t : j) {
    TermDecomp d;
    d.coefficient = t.contains("coefficient") ? rat_from_json(t["coefficient"]) : Rat(1);
    const Json& factors = field(t, "factors");
    if (!factors.is_array()) schema("'factors' must be an array");
    for (const auto& f : factors) {
      const Json& base = field(f, "base");
      if (!base.is_string()) schema("'base' must be an expression string");
      std::string v;
      UPoly b = parse_upoly(base.get<std::string>(), &v);
      if (!v.empty()) {
        if (var && *var != v) {
          throw Error(ErrorCode::NotUnivariate, "bases use both " + *var + " and " + v);
        }
        var = v;
      }
      d.factors.push_back({std::move(b), positive_u32(field(f, "exponent"), "'exponent'")});
    }
    out.push_back(std::move(d));
  }
  if (variable != nullptr) *variable = var.value_or("t");
  return out;
}

Json terms_to_json(const std::vector<TermDecomp>& terms, std::string_view variable) {
  Json a = Json::array();
  for (const auto& t : terms) {
    Json factors = Json::array();
    for (const auto& f : t.factors) {
      factors.push_back(Json{{"base", format_upoly(f.base, variable)}, {"exponent", f.exponent}});
    }
    a.push_back(Json{{"coefficient", rat_to_json(t.coefficient)}, {"factors", factors}});
  }
  return a;
}

TrinomialData trinomial_from_json(const Json& j) {
  TrinomialData data;
  const Json& a = field(j, "A");
  if (!a.is_array()) schema("'A' must be an array of pairs");
  for (const auto& col : a) {
    if (!col.is_array() || col.size() != 2) schema("each entry of 'A' must be a pair");
    data.a.emplace_back(rat_from_json(col[0]), rat_from_json(col[1]));
  }
  const Json& l = field(j, "L");
  if (!l.is_array()) schema("'L' must be an array of exponent rows");
  for (const auto& row : l) {
    if (!row.is_array()) schema("each row of 'L' must be an array");
    std::vector<std::uint32_t> r;
    for (const auto& e : row) r.push_back(positive_u32(e, "exponents in 'L'"));
    data.l.push_back(std::move(r));
  }
  if (j.contains("n")) {
    for (const auto& n : j["n"]) data.n.push_back(positive_u32(n, "block sizes in 'n'"));
  } else {
    for (const auto& row : data.l) data.n.push_back(static_cast<std::uint32_t>(row.size()));
  }
  if (j.contains("names")) {
    for (const auto& row : j["names"]) {
      std::vector<VarName> names;
      for (const auto& s : row) {
        if (!s.is_string() || !is_valid_var_name(s.get<std::string>())) schema("bad variable name in 'names'");
        names.push_back(s.get<std::string>());
      }
      data.names.push_back(std::move(names));
    }
  }
  validate(data);
  return data;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, path + ": " + e.what());
  }
}

}  // namespace rigiditykit
