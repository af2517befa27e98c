#include "rigiditykit/fuzz.hpp"

#include <chrono>

#include "rigiditykit/bounds.hpp"
#include "rigiditykit/error.hpp"
#include "rigiditykit/expr.hpp"
#include "rigiditykit/random.hpp"

namespace rigiditykit {

namespace {

using Clock = std::chrono::steady_clock;

void record(FuzzReport& r, FuzzInstance inst, bool holds) {
  ++r.checked;
  if (!holds) {
    ++r.violations;
    if (r.violation_witnesses.size() < FuzzReport::kMaxLogged) r.violation_witnesses.push_back(inst);
    return;
  }
  if (inst.gap() == 0) ++r.tight_count;
  if (inst.gap() <= FuzzReport::kNearTightGap) {
    ++r.near_tight_count;
    if (r.tight_instances.size() < FuzzReport::kMaxLogged) r.tight_instances.push_back(std::move(inst));
  }
}

std::vector<UPoly> draw_family(std::uint64_t seed, std::uint64_t i, std::size_t n, std::uint32_t max_deg,
                               std::int64_t coeff_bound) {
  Rng rng(trial_seed(seed, i));
  std::vector<UPoly> fs;
  fs.reserve(n);
  UPoly sum;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    fs.push_back(gen_random_upoly(rng, max_deg, coeff_bound));
    sum += fs.back();
  }
  fs.push_back(-sum);
  return fs;
}

bool has_zero(const std::vector<UPoly>& fs) {
  for (const auto& f : fs) {
    if (f.is_zero()) return true;
  }
  return false;
}

Json instance_json(const FuzzInstance& inst) {
  Json polys = Json::array();
  for (const auto& p : inst.polys) polys.push_back(format_upoly(p));
  return Json{{"trial", inst.trial},
              {"polys", polys},
              {"max_degree", inst.max_degree},
              {"bound", inst.bound},
              {"gap", inst.gap()}};
}

}  // namespace

FuzzReport fuzz_ms(std::uint64_t trials, std::uint64_t seed, std::uint32_t max_deg, std::int64_t coeff_bound) {
  const auto start = Clock::now();
  FuzzReport r;
  r.theorem = "ms";
  r.n = 3;
  r.seed = seed;
  r.max_deg = max_deg;
  r.coeff_bound = coeff_bound;
  for (std::uint64_t i = 0; i < trials; ++i) {
    ++r.trials;
    auto fs = draw_family(seed, i, 3, max_deg, coeff_bound);
    if (has_zero(fs)) {
      ++r.hypothesis_rejections;
      continue;
    }
    const MsReport rep = check_ms_triple(fs[0], fs[1], fs[2]);
    if (!rep.hypotheses_ok) {
      ++r.hypothesis_rejections;
      continue;
    }
    record(r, FuzzInstance{i, std::move(fs), rep.max_degree, rep.bound}, rep.holds);
  }
  r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

FuzzReport fuzz_gms(std::size_t n, std::uint64_t trials, std::uint64_t seed, std::uint32_t max_deg,
                    std::int64_t coeff_bound) {
  if (n < 3) throw Error(ErrorCode::TooFewTerms, "n = " + std::to_string(n));
  if (n > kSubsetCap) {
    throw Error(ErrorCode::SubsetCapExceeded, "n = " + std::to_string(n) + " exceeds " + std::to_string(kSubsetCap));
  }
  const auto start = Clock::now();
  FuzzReport r;
  r.theorem = "gms";
  r.n = n;
  r.seed = seed;
  r.max_deg = max_deg;
  r.coeff_bound = coeff_bound;
  for (std::uint64_t i = 0; i < trials; ++i) {
    ++r.trials;
    auto fs = draw_family(seed, i, n, max_deg, coeff_bound);
    if (has_zero(fs)) {
      ++r.hypothesis_rejections;
      continue;
    }
    const GenMsReport rep = check_generalized_ms(fs);
    if (!rep.hypotheses_ok) {
      ++r.hypothesis_rejections;
      continue;
    }
    record(r, FuzzInstance{i, std::move(fs), rep.max_degree, rep.bound}, rep.holds);
  }
  r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

Json to_json(const FuzzReport& r, bool with_timing) {
  Json j;
  j["theorem"] = r.theorem;
  j["n"] = r.n;
  j["seed"] = r.seed;
  j["max_deg"] = r.max_deg;
  j["coeff_bound"] = r.coeff_bound;
  j["trials"] = r.trials;
  j["hypothesis_rejections"] = r.hypothesis_rejections;
  j["checked"] = r.checked;
  j["violations"] = r.violations;
  j["tight_count"] = r.tight_count;
  j["near_tight_count"] = r.near_tight_count;
  Json tight = Json::array();
  for (const auto& t : r.tight_instances) tight.push_back(instance_json(t));
  j["tight_instances"] = tight;
  if (!r.violation_witnesses.empty()) {
    Json w = Json::array();
    for (const auto& t : r.violation_witnesses) w.push_back(instance_json(t));
    j["violation_witnesses"] = w;
  }
  if (with_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

}  // namespace rigiditykit
