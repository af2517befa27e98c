#include "rigiditykit/trinomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "rigiditykit/error.hpp"

namespace rigiditykit {

std::vector<std::vector<VarName>> TrinomialData::variable_names() const {
  if (!names.empty()) return names;
  bool wide = a.size() > 10;
  for (auto ni : n) wide = wide || ni >= 10;
  std::vector<std::vector<VarName>> out(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (std::uint32_t j = 1; j <= n[i]; ++j) {
      out[i].push_back("T" + std::to_string(i) + (wide ? "_" : "") + std::to_string(j));
    }
  }
  return out;
}

Rat alpha(const TrinomialData& data, std::size_t i, std::size_t j) {
  return data.a.at(i).first * data.a.at(j).second - data.a.at(j).first * data.a.at(i).second;
}

void validate(const TrinomialData& data) {
  if (data.a.size() < 3) throw Error(ErrorCode::InvalidData, "need r >= 2, i.e. at least 3 vectors");
  if (data.n.size() != data.a.size() || data.l.size() != data.a.size()) {
    throw Error(ErrorCode::InvalidData, "A, n and L must have r + 1 entries each");
  }
  for (std::size_t i = 0; i < data.n.size(); ++i) {
    if (data.n[i] == 0) throw Error(ErrorCode::InvalidData, "n_" + std::to_string(i) + " must be positive");
    if (data.l[i].size() != data.n[i]) {
      throw Error(ErrorCode::InvalidData, "row " + std::to_string(i) + " of L must have n_" + std::to_string(i) + " entries");
    }
    for (auto lij : data.l[i]) {
      if (lij == 0) throw Error(ErrorCode::InvalidData, "exponents in L must be positive");
    }
  }
  if (!data.names.empty()) {
    if (data.names.size() != data.n.size()) throw Error(ErrorCode::InvalidData, "names must have r + 1 rows");
    std::set<VarName> seen;
    for (std::size_t i = 0; i < data.names.size(); ++i) {
      if (data.names[i].size() != data.n[i]) {
        throw Error(ErrorCode::InvalidData, "names row " + std::to_string(i) + " must have n_" + std::to_string(i) + " entries");
      }
      for (const auto& v : data.names[i]) {
        if (!is_valid_var_name(v)) throw Error(ErrorCode::InvalidData, "invalid variable name '" + v + "'");
        if (!seen.insert(v).second) throw Error(ErrorCode::InvalidData, "variable '" + v + "' named twice");
      }
    }
  }
  for (std::size_t i = 0; i < data.a.size(); ++i) {
    for (std::size_t k = i + 1; k < data.a.size(); ++k) {
      if (alpha(data, i, k).is_zero()) {
        throw Error(ErrorCode::DegenerateData,
                    "a_" + std::to_string(i) + " and a_" + std::to_string(k) + " are linearly dependent");
      }
    }
  }
}

namespace {

MPoly block_monomial(const std::vector<VarName>& vars, const std::vector<std::uint32_t>& exps, const Rat& c) {
  Monomial m;
  for (std::size_t j = 0; j < vars.size(); ++j) m = m * Monomial::variable(vars[j], exps[j]);
  return MPoly::term(c, std::move(m));
}

Rat block_inverse_sum(const std::vector<std::uint32_t>& exps) {
  Rat s;
  for (auto e : exps) s += Rat(1, e);
  return s;
}

}  // namespace

std::vector<MPoly> build_trinomial_relations(const TrinomialData& data) {
  validate(data);
  const auto names = data.variable_names();
  std::vector<MPoly> out;
  for (std::size_t i = 0; i + 2 < data.a.size(); ++i) {
    const std::size_t j = i + 1;
    const std::size_t k = i + 2;
    out.push_back(block_monomial(names[i], data.l[i], alpha(data, j, k)) +
                  block_monomial(names[j], data.l[j], alpha(data, k, i)) +
                  block_monomial(names[k], data.l[k], alpha(data, i, j)));
  }
  return out;
}

Certificate certify_trinomial_variety(const TrinomialData& data, bool assume_graded_factorial) {
  const auto relations = build_trinomial_relations(data);
  Certificate cert;
  bool all_pass = true;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const Rat sum = block_inverse_sum(data.l[i]) + block_inverse_sum(data.l[i + 1]) + block_inverse_sum(data.l[i + 2]);
    const bool pass = sum <= Rat(1);
    all_pass = all_pass && pass;
    cert.checked.push_back({"relation g_" + std::to_string(i) + "," + std::to_string(i + 1) + "," +
                                std::to_string(i + 2) + ": exponent sum <= 1",
                            pass});
    cert.exponent_sums.push_back({sum, Rat(1)});
  }
  cert.assumptions.push_back(assume_graded_factorial
                                 ? "coordinate ring factorially graded, monomials relatively prime (asserted)"
                                 : "coordinate ring factorially graded, monomials relatively prime (not asserted)");

  FactorialityReport fact;
  for (const auto& row : data.l) {
    std::uint64_t d = 0;
    for (auto e : row) d = std::gcd(d, std::uint64_t{e});
    fact.d.push_back(d);
  }
  fact.pairwise_coprime = true;
  for (std::size_t i = 0; i < fact.d.size(); ++i) {
    for (std::size_t k = i + 1; k < fact.d.size(); ++k) {
      if (std::gcd(fact.d[i], fact.d[k]) != 1) fact.pairwise_coprime = false;
    }
  }
  cert.factoriality = fact;

  std::string notes = std::to_string(relations.size()) + " relation(s); ";
  notes += fact.pairwise_coprime ? "d_i pairwise coprime: factorial trinomial variety"
                                 : "d_i not pairwise coprime: non-factorial trinomial variety";
  if (all_pass && assume_graded_factorial) {
    cert.verdict = Verdict::Rigid;
    for (const auto& row : data.variable_names()) cert.ml_generators.insert(cert.ml_generators.end(), row.begin(), row.end());
    std::sort(cert.ml_generators.begin(), cert.ml_generators.end());
    cert.sml_all = true;
    notes += "; every generator lies in ML, so SML(X) = K[X]";
  } else if (!all_pass) {
    notes += "; exponent criterion fails for some relation, no non-rigidity is claimed";
  } else {
    notes += "; graded factoriality was not asserted";
  }
  cert.notes = notes;
  return cert;
}

}  // namespace rigiditykit
