#include "rigiditykit/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <set>

#include "rigiditykit/bounds.hpp"
#include "rigiditykit/error.hpp"
#include "rigiditykit/expr.hpp"
#include "rigiditykit/mterm.hpp"
#include "rigiditykit/rigidity.hpp"
#include "rigiditykit/shadow.hpp"
#include "rigiditykit/trinomial.hpp"

namespace rigiditykit {

namespace {

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorCode::SchemaError, msg); }

const Json& need(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) schema(std::string("missing field '") + key + "'");
  return obj[key];
}

std::string need_string(const Json& obj, const char* key) {
  const Json& v = need(obj, key);
  if (!v.is_string()) schema(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

bool flag(const Json& obj, const char* key) {
  if (!obj.contains(key)) return false;
  if (!obj[key].is_boolean()) schema(std::string("field '") + key + "' must be a boolean");
  return obj[key].get<bool>();
}

std::optional<std::set<VarName>> vars_field(const Json& obj) {
  if (!obj.contains("vars")) return std::nullopt;
  std::set<VarName> out;
  for (const auto& v : obj["vars"]) {
    if (!v.is_string()) schema("'vars' must list variable names");
    out.insert(v.get<std::string>());
  }
  return out;
}

std::vector<UPoly> polys_field(const Json& input) {
  const Json& ps = need(input, "polys");
  if (!ps.is_array()) schema("'polys' must be an array of expressions");
  std::vector<UPoly> out;
  std::optional<std::string> var;
  for (const auto& p : ps) {
    if (!p.is_string()) schema("'polys' must be an array of expressions");
    std::string v;
    out.push_back(parse_upoly(p.get<std::string>(), &v));
    if (!v.empty()) {
      if (var && *var != v) throw Error(ErrorCode::NotUnivariate, "inputs use both " + *var + " and " + v);
      var = v;
    }
  }
  return out;
}

void compare(const std::string& entry, const std::string& path, const Json& expected, const Json& actual,
             std::vector<CorpusMismatch>& out) {
  if (expected.is_object() && actual.is_object()) {
    for (const auto& [key, value] : expected.items()) {
      const std::string sub = path + "/" + key;
      if (!actual.contains(key)) {
        out.push_back({entry, sub, value, Json()});
      } else {
        compare(entry, sub, value, actual[key], out);
      }
    }
    return;
  }
  if (expected.is_array() && actual.is_array() && expected.size() == actual.size()) {
    for (std::size_t i = 0; i < expected.size(); ++i) {
      compare(entry, path + "/" + std::to_string(i), expected[i], actual[i], out);
    }
    return;
  }
  if (expected != actual) out.push_back({entry, path.empty() ? "/" : path, expected, actual});
}

}  // namespace

Json evaluate_corpus_input(const std::string& kind, const Json& input) {
  if (kind == "ms") {
    const auto fs = polys_field(input);
    if (fs.size() != 3) schema("'ms' takes exactly three polynomials");
    return to_json(check_ms_triple(fs[0], fs[1], fs[2]));
  }
  if (kind == "gms") return to_json(check_generalized_ms(polys_field(input)));
  if (kind == "shadow") {
    const std::string mode = need_string(input, "mode");
    const auto terms = terms_from_json(need(input, "terms"));
    if (mode == "zero") return to_json(shadow_sum_zero(terms));
    if (mode == "const") return to_json(shadow_sum_const(terms));
    schema("shadow mode must be 'zero' or 'const'");
  }
  if (kind == "rigidity") {
    MPoly f = parse_poly(need_string(input, "poly"));
    if (input.contains("subst")) f = substitute(f, parse_subst(need_string(input, "subst"), f.vars()));
    return to_json(certify_rigidity(validate_mterm(f), flag(input, "assume_prime"), vars_field(input)));
  }
  if (kind == "trinomial") {
    return to_json(certify_trinomial_variety(trinomial_from_json(input), flag(input, "assume_graded_factorial")));
  }
  if (kind == "semirigid") {
    const MPoly f = parse_poly(need_string(input, "poly"));
    const auto ring = vars_field(input);
    std::optional<std::map<VarName, MPoly>> subst;
    if (input.contains("subst")) subst = parse_subst(need_string(input, "subst"), ring ? *ring : f.vars());
    return to_json(detect_semirigid(f, subst, flag(input, "assume_prime"), ring));
  }
  schema("unknown kind '" + kind + "'");
}

CorpusReport run_corpus_entries(const Json& corpus, const std::string& origin) {
  if (!corpus.is_array()) schema(origin + ": a corpus is a JSON array of entries");
  CorpusReport r;
  r.files.push_back(origin);
  std::set<std::string> names;
  for (const auto& e : corpus) {
    const std::string name = need_string(e, "name");
    const std::string kind = need_string(e, "kind");
    need_string(e, "comment");
    const Json& input = need(e, "input");
    const Json& expected = need(e, "expected");
    if (!expected.is_object()) schema(name + ": 'expected' must be an object");
    if (!names.insert(name).second) schema(origin + ": duplicate entry name '" + name + "'");
    Json actual;
    try {
      actual = evaluate_corpus_input(kind, input);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::SchemaError) throw Error(ErrorCode::SchemaError, name + ": " + err.detail());
      actual = Json{{"error", std::string(error_code_name(err.code()))}};
    }
    ++r.entries;
    const std::size_t before = r.mismatches.size();
    compare(name, "", expected, actual, r.mismatches);
    if (r.mismatches.size() == before) ++r.passed;
  }
  if (r.entries == 0) r.warnings.push_back(origin + ": corpus has no entries");
  return r;
}

CorpusReport run_regression_corpus(const std::string& path) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(path, ec)) return run_corpus_entries(read_json_file(path), path);
  std::vector<std::string> files;
  for (const auto& ent : fs::directory_iterator(path, ec)) {
    if (ent.is_regular_file() && ent.path().extension() == ".json") files.push_back(ent.path().string());
  }
  if (ec) throw Error(ErrorCode::IoError, "cannot list " + path);
  std::sort(files.begin(), files.end());
  CorpusReport total;
  for (const auto& f : files) {
    CorpusReport r = run_corpus_entries(read_json_file(f), f);
    total.files.push_back(f);
    total.entries += r.entries;
    total.passed += r.passed;
    for (auto& m : r.mismatches) total.mismatches.push_back(std::move(m));
    for (auto& w : r.warnings) total.warnings.push_back(std::move(w));
  }
  if (files.empty()) total.warnings.push_back(path + ": no corpus files");
  return total;
}

Json to_json(const CorpusReport& r) {
  Json j;
  j["files"] = r.files;
  j["entries"] = r.entries;
  j["passed"] = r.passed;
  Json ms = Json::array();
  for (const auto& m : r.mismatches) {
    ms.push_back(Json{{"entry", m.entry}, {"path", m.path}, {"expected", m.expected}, {"actual", m.actual}});
  }
  j["mismatches"] = ms;
  j["warnings"] = r.warnings;
  j["ok"] = r.ok();
  return j;
}

}  // namespace rigiditykit
