#include "rigiditykit/bounds.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "rigiditykit/error.hpp"

namespace rigiditykit {

std::string_view to_string(MsHypothesis h) {
  switch (h) {
    case MsHypothesis::ZeroEntry: return "ZeroEntry";
    case MsHypothesis::NotZeroSum: return "NotZeroSum";
    case MsHypothesis::NotCoprime: return "NotCoprime";
    case MsHypothesis::AllConstant: return "AllConstant";
  }
  return "?";
}

std::string_view to_string(GmsHypothesis h) {
  switch (h) {
    case GmsHypothesis::NotZeroSum: return "NotZeroSum";
    case GmsHypothesis::AllConstant: return "AllConstant";
    case GmsHypothesis::SubsetNotCoprime: return "SubsetNotCoprime";
  }
  return "?";
}

MsReport check_ms_triple(const UPoly& a, const UPoly& b, const UPoly& c) {
  MsReport r;
  r.max_degree = std::max({a.degree(), b.degree(), c.degree()}).value_or_minus_one();
  if (a.is_zero() || b.is_zero() || c.is_zero()) {
    r.failed_hypothesis = MsHypothesis::ZeroEntry;
    return r;
  }
  const std::array<UPoly, 3> triple{a, b, c};
  r.pairwise_coprime = pairwise_coprime(triple).coprime;
  r.bound = static_cast<std::int64_t>(distinct_root_count(a * b * c)) - 1;
  r.holds = r.max_degree <= r.bound;
  r.tight = r.max_degree == r.bound;

  if (!(a + b + c).is_zero()) {
    r.failed_hypothesis = MsHypothesis::NotZeroSum;
  } else if (!set_gcd(triple).is_constant()) {
    r.failed_hypothesis = MsHypothesis::NotCoprime;
  } else if (a.is_constant() && b.is_constant() && c.is_constant()) {
    r.failed_hypothesis = MsHypothesis::AllConstant;
  }
  r.hypotheses_ok = !r.failed_hypothesis.has_value();
  return r;
}

namespace detail {

namespace {

// Evaluations at fixed points modulo 2^61 - 1. A subset whose exact sum is
// zero has a zero fingerprint sum, so the fingerprint only prunes.
constexpr std::uint64_t kFpPrime = (std::uint64_t{1} << 61) - 1;
constexpr std::array<std::uint64_t, 2> kFpPoints{1234567891ULL, 987654321987ULL};
using Fingerprint = std::array<std::uint64_t, kFpPoints.size()>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kFpPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1U;
  }
  return r;
}

std::optional<Fingerprint> fingerprint(const UPoly& p) {
  static const mpz_class modulus = [] {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), 2, 61);
    return mpz_class(m - 1);
  }();
  Fingerprint fp{};
  const auto cs = p.coefficients();
  std::vector<std::uint64_t> residues(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    mpz_class n = cs[i].value().get_num() % modulus;
    if (n < 0) n += modulus;
    mpz_class d = cs[i].value().get_den() % modulus;
    if (d == 0) return std::nullopt;
    const std::uint64_t nu = n.get_ui();
    const std::uint64_t du = d.get_ui();
    residues[i] = mulmod(nu, powmod(du, kFpPrime - 2));
  }
  for (std::size_t k = 0; k < kFpPoints.size(); ++k) {
    std::uint64_t acc = 0;
    for (std::size_t i = residues.size(); i-- > 0;) acc = (mulmod(acc, kFpPoints[k]) + residues[i]) % kFpPrime;
    fp[k] = acc;
  }
  return fp;
}

// Advances `idx` (sorted, size k, values < n) to the next combination in
// lexicographic order; false when exhausted.
bool next_combination(IndexSet& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<IndexSet> enumerate_zero_sum_subsets(std::span<const UPoly> fs) {
  const std::size_t n = fs.size();
  if (n > kSubsetCap) {
    throw Error(ErrorCode::SubsetCapExceeded,
                std::to_string(n) + " terms exceed the subset enumeration cap of " + std::to_string(kSubsetCap));
  }
  std::vector<Fingerprint> fps;
  bool use_fp = true;
  for (const auto& f : fs) {
    auto fp = fingerprint(f);
    if (!fp) {
      use_fp = false;
      break;
    }
    fps.push_back(*fp);
  }

  std::vector<IndexSet> out;
  for (std::size_t k = 2; k <= n; ++k) {
    IndexSet idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    do {
      if (use_fp) {
        Fingerprint sum{};
        for (std::size_t i : idx) {
          for (std::size_t c = 0; c < sum.size(); ++c) sum[c] = (sum[c] + fps[i][c]) % kFpPrime;
        }
        if (std::any_of(sum.begin(), sum.end(), [](std::uint64_t v) { return v != 0; })) continue;
      }
      UPoly total;
      for (std::size_t i : idx) total += fs[i];
      if (total.is_zero()) out.push_back(idx);
    } while (next_combination(idx, n));
  }
  return out;
}

}  // namespace detail

std::vector<IndexSet> zero_sum_subsets(std::span<const UPoly> fs) {
  if (fs.size() < 3) throw Error(ErrorCode::TooFewTerms, "zero-sum subset search needs at least 3 polynomials");
  return detail::enumerate_zero_sum_subsets(fs);
}

GenMsReport check_generalized_ms(std::span<const UPoly> fs) {
  const std::size_t n = fs.size();
  if (n < 3) throw Error(ErrorCode::TooFewTerms, "generalized bound needs at least 3 polynomials");
  if (n > kSubsetCap) {
    throw Error(ErrorCode::SubsetCapExceeded,
                std::to_string(n) + " terms exceed the subset enumeration cap of " + std::to_string(kSubsetCap));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (fs[i].is_zero()) throw Error(ErrorCode::ZeroEntry, "entry " + std::to_string(i) + " is zero");
  }

  GenMsReport r;
  r.n = n;
  std::int64_t root_sum = 0;
  UPoly total;
  bool all_constant = true;
  for (const auto& f : fs) {
    r.root_counts.push_back(distinct_root_count(f));
    root_sum += static_cast<std::int64_t>(r.root_counts.back());
    r.max_degree = std::max(r.max_degree, f.degree().value());
    total += f;
    all_constant = all_constant && f.is_constant();
  }
  r.bound = static_cast<std::int64_t>(n - 2) * (root_sum - 1);
  r.holds = r.max_degree <= r.bound;

  if (!total.is_zero()) {
    r.failed_hypothesis = GmsHypothesis::NotZeroSum;
  } else if (all_constant) {
    r.failed_hypothesis = GmsHypothesis::AllConstant;
  } else {
    for (auto& subset : detail::enumerate_zero_sum_subsets(fs)) {
      std::vector<UPoly> members;
      members.reserve(subset.size());
      for (std::size_t i : subset) members.push_back(fs[i]);
      if (!set_gcd(members).is_constant()) {
        r.failed_hypothesis = GmsHypothesis::SubsetNotCoprime;
        r.violating_subset = std::move(subset);
        break;
      }
    }
  }
  r.hypotheses_ok = !r.failed_hypothesis.has_value();
  return r;
}

}  // namespace rigiditykit
