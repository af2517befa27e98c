#include "rigiditykit/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_map>

#include "rigiditykit/error.hpp"
#include "rigiditykit/expr.hpp"

namespace rigiditykit {

namespace {

std::vector<UPoly> base_space(std::uint32_t deg_cap, const std::vector<std::int64_t>& coeffs) {
  std::vector<UPoly> out;
  std::vector<std::size_t> idx(deg_cap + 1, 0);
  for (;;) {
    std::vector<Rat> c;
    c.reserve(idx.size());
    for (auto i : idx) c.emplace_back(coeffs[i]);
    UPoly p(std::move(c));
    if (!p.is_zero()) out.push_back(std::move(p));
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == coeffs.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

void exponent_tuples(const std::vector<std::uint32_t>& ks, std::size_t m, const Rat& threshold,
                     std::vector<std::uint32_t>& cur, Rat partial, std::vector<std::vector<std::uint32_t>>& out) {
  if (cur.size() == m) {
    out.push_back(cur);
    return;
  }
  for (auto k : ks) {
    Rat next = partial + Rat(1, k);
    if (next > threshold) continue;
    cur.push_back(k);
    exponent_tuples(ks, m, threshold, cur, next, out);
    cur.pop_back();
  }
}

bool checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t& out) { return !__builtin_mul_overflow(a, b, &out); }

}  // namespace

std::string SearchSpace::describe() const {
  std::ostringstream os;
  os << "m=" << m << ", base degree <= " << deg_cap << ", base coefficients {";
  for (std::size_t i = 0; i < coeff_set.size(); ++i) os << (i ? "," : "") << coeff_set[i];
  os << "}, exponents {";
  for (std::size_t i = 0; i < exponent_set.size(); ++i) os << (i ? "," : "") << exponent_set[i];
  os << "} with sum 1/k <= 1/" << (m >= 2 ? m - 2 : 0) << ", unit term coefficients";
  return os.str();
}

std::uint64_t search_budget() {
  if (const char* env = std::getenv("RIGIDITYKIT_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultSearchBudget;
}

SearchReport exhaustive_shadow_search(const SearchSpace& space, std::uint64_t budget) {
  if (space.m < 3) throw Error(ErrorCode::TooFewTerms, "the zero-sum search needs m >= 3");
  std::vector<std::int64_t> coeffs = space.coeff_set;
  std::sort(coeffs.begin(), coeffs.end());
  coeffs.erase(std::unique(coeffs.begin(), coeffs.end()), coeffs.end());
  std::vector<std::uint32_t> ks = space.exponent_set;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  if (std::find(ks.begin(), ks.end(), 0u) != ks.end()) throw Error(ErrorCode::InvalidArgument, "exponent 0");

  SearchReport r;
  r.space_description = space.describe();
  const Rat threshold(1, static_cast<std::int64_t>(space.m - 2));
  std::vector<std::vector<std::uint32_t>> tuples;
  std::vector<std::uint32_t> cur;
  if (!coeffs.empty()) exponent_tuples(ks, space.m, threshold, cur, Rat(0), tuples);
  r.exponent_tuples = tuples.size();

  // Base count is known before building the space: |C|^(deg_cap+1) - [0 in C].
  std::uint64_t nb = 1;
  bool overflow = false;
  for (std::uint32_t i = 0; i <= space.deg_cap && !overflow; ++i) overflow = !checked_mul(nb, coeffs.size(), nb);
  if (!overflow && std::binary_search(coeffs.begin(), coeffs.end(), 0)) --nb;
  std::uint64_t total = tuples.empty() ? 0 : 1;
  for (std::size_t i = 0; i + 1 < space.m && total != 0 && !overflow; ++i) overflow = !checked_mul(total, nb, total);
  if (!overflow) overflow = !checked_mul(total, tuples.size(), total);
  if (overflow || total > budget) {
    throw Error(ErrorCode::SearchBudgetExceeded,
                (overflow ? std::string("more than 2^64") : std::to_string(total)) + " instances, budget " +
                    std::to_string(budget));
  }
  r.instances_enumerated = total;
  if (total == 0) return r;

  const std::vector<UPoly> bases = base_space(space.deg_cap, coeffs);
  r.base_count = bases.size();

  // powers[k][b] = bases[b]^k; roots[k] maps a k-th power back to its bases.
  std::map<std::uint32_t, std::vector<UPoly>> powers;
  std::map<std::uint32_t, std::unordered_map<UPoly, std::vector<std::size_t>>> roots;
  for (auto k : ks) {
    auto& pw = powers[k];
    auto& rt = roots[k];
    pw.reserve(bases.size());
    for (std::size_t b = 0; b < bases.size(); ++b) {
      pw.push_back(bases[b].pow(k));
      rt[pw.back()].push_back(b);
    }
  }

  const std::size_t free_terms = space.m - 1;
  std::vector<std::size_t> choice(free_terms, 0);
  std::vector<UPoly> prefix(free_terms + 1);
  for (const auto& tuple : tuples) {
    const auto& last_roots = roots.at(tuple.back());
    std::fill(choice.begin(), choice.end(), 0);
    std::size_t valid = 0;  // prefix[0..valid] are current
    for (;;) {
      for (std::size_t t = valid; t < free_terms; ++t) prefix[t + 1] = prefix[t] + powers.at(tuple[t])[choice[t]];
      const auto it = last_roots.find(-prefix[free_terms]);
      if (it != last_roots.end()) {
        for (auto b : it->second) {
          std::vector<TermDecomp> terms(space.m);
          for (std::size_t t = 0; t < free_terms; ++t) terms[t].factors.push_back({bases[choice[t]], tuple[t]});
          terms[free_terms].factors.push_back({bases[b], tuple.back()});
          const ShadowReport rep = shadow_sum_zero(terms);
          ++r.zero_sum_instances;
          ++r.verdict_counts[std::string(to_string(rep.verdict))];
          if (rep.verdict == ShadowVerdict::TheoremViolation) {
            ++r.counterexamples;
            if (r.counterexample_witnesses.size() < SearchReport::kMaxWitnesses) {
              r.counterexample_witnesses.push_back({terms, rep.verdict});
            }
          } else if (rep.verdict == ShadowVerdict::ConstancyForced &&
                     r.witnesses.size() < SearchReport::kMaxWitnesses) {
            r.witnesses.push_back({std::move(terms), rep.verdict});
          }
        }
      }
      std::size_t t = free_terms;
      while (t > 0 && ++choice[t - 1] == bases.size()) choice[--t] = 0;
      if (t == 0) break;
      valid = t - 1;
    }
  }
  return r;
}

Json to_json(const SearchReport& r) {
  Json j;
  j["space_description"] = r.space_description;
  j["base_count"] = r.base_count;
  j["exponent_tuples"] = r.exponent_tuples;
  j["instances_enumerated"] = r.instances_enumerated;
  j["zero_sum_instances"] = r.zero_sum_instances;
  Json counts = Json::object();
  for (const auto& [k, v] : r.verdict_counts) counts[k] = v;
  j["verdict_counts"] = counts;
  j["counterexamples"] = r.counterexamples;
  auto dump = [](const std::vector<SearchWitness>& ws) {
    Json a = Json::array();
    for (const auto& w : ws) {
      a.push_back(Json{{"terms", terms_to_json(w.terms)}, {"verdict", std::string(to_string(w.verdict))}});
    }
    return a;
  };
  j["witnesses"] = dump(r.witnesses);
  if (!r.counterexample_witnesses.empty()) j["counterexample_witnesses"] = dump(r.counterexample_witnesses);
  return j;
}

}  // namespace rigiditykit
