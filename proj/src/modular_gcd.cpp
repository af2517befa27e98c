#include "modular_gcd.hpp"

#include <cstdint>
#include <utility>

namespace rigiditykit::detail {

namespace {

using Word = std::uint64_t;
using ModPoly = std::vector<Word>;  // low to high, canonical (no trailing zeros)

constexpr std::size_t kMaxPrimes = 512;

bool is_prime(Word n) {
  if (n < 2 || n % 2 == 0) return n == 2;
  for (Word d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// Primes below 2^31, descending. Products of two residues fit in 64 bits.
const std::vector<Word>& prime_table() {
  static const std::vector<Word> table = [] {
    std::vector<Word> primes;
    primes.reserve(kMaxPrimes);
    for (Word n = (Word{1} << 31) - 1; primes.size() < kMaxPrimes; n -= 2) {
      if (is_prime(n)) primes.push_back(n);
    }
    return primes;
  }();
  return table;
}

Word mul_mod(Word a, Word b, Word p) { return a * b % p; }

Word pow_mod(Word a, Word e, Word p) {
  Word r = 1;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return r;
}

Word inv_mod(Word a, Word p) { return pow_mod(a, p - 2, p); }

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly reduce(const std::vector<mpz_class>& f, Word p) {
  ModPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = mpz_fdiv_ui(f[i].get_mpz_t(), static_cast<unsigned long>(p));
  }
  trim(out);
  return out;
}

// In-place remainder of a modulo b (b nonzero).
void rem_in_place(ModPoly& a, const ModPoly& b, Word p) {
  const std::size_t db = b.size() - 1;
  const Word inv_lead = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const Word q = mul_mod(a.back(), inv_lead, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j <= db; ++j) {
      a[shift + j] = (a[shift + j] + p - mul_mod(q, b[j], p)) % p;
    }
    trim(a);
  }
}

ModPoly gcd_mod(ModPoly a, ModPoly b, Word p) {
  while (!b.empty()) {
    rem_in_place(a, b, p);
    std::swap(a, b);
  }
  const Word inv_lead = inv_mod(a.back(), p);
  for (auto& c : a) c = mul_mod(c, inv_lead, p);
  return a;
}

mpz_class symmetric(const mpz_class& c, const mpz_class& modulus) {
  mpz_class r = c % modulus;
  if (r < 0) r += modulus;
  if (2 * r > modulus) r -= modulus;
  return r;
}

UPoly to_upoly(const std::vector<mpz_class>& f) {
  std::vector<Rat> coeffs;
  coeffs.reserve(f.size());
  for (const auto& c : f) coeffs.emplace_back(c, mpz_class(1));
  return UPoly(std::move(coeffs));
}

std::vector<mpz_class> primitive_part(std::vector<mpz_class> f) {
  mpz_class content = 0;
  for (const auto& c : f) content = ::gcd(content, c);
  if (content > 1) {
    for (auto& c : f) c /= content;
  }
  return f;
}

}  // namespace

std::vector<mpz_class> primitive_integer(const UPoly& p) {
  mpz_class denom_lcm = 1;
  for (const auto& c : p.coefficients()) denom_lcm = lcm(denom_lcm, c.value().get_den());
  std::vector<mpz_class> f;
  f.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    f.emplace_back(c.value().get_num() * (denom_lcm / c.value().get_den()));
  }
  return primitive_part(std::move(f));
}

UPoly modular_gcd(const UPoly& p, const UPoly& q) {
  if (p.is_constant() || q.is_constant()) return UPoly::constant(Rat(1));
  const auto a = primitive_integer(p);
  const auto b = primitive_integer(q);
  const mpz_class lead_gcd = ::gcd(a.back(), b.back());
  const UPoly pa = to_upoly(a);
  const UPoly pb = to_upoly(b);

  std::size_t best_degree = std::min(a.size(), b.size());  // exceeds any attainable image degree
  std::vector<mpz_class> image;
  mpz_class modulus;
  std::vector<mpz_class> previous_lift;

  for (Word prime : prime_table()) {
    const unsigned long pu = static_cast<unsigned long>(prime);
    if (mpz_divisible_ui_p(a.back().get_mpz_t(), pu) || mpz_divisible_ui_p(b.back().get_mpz_t(), pu)) continue;
    ModPoly g = gcd_mod(reduce(a, prime), reduce(b, prime), prime);
    const std::size_t d = g.size() - 1;
    if (d == 0) return UPoly::constant(Rat(1));
    if (d > best_degree) continue;  // unlucky prime

    const Word scale = mpz_fdiv_ui(lead_gcd.get_mpz_t(), pu);
    for (auto& c : g) c = mul_mod(c, scale, prime);

    if (d < best_degree) {
      best_degree = d;
      image.assign(g.size(), mpz_class(0));
      for (std::size_t i = 0; i < g.size(); ++i) image[i] = static_cast<unsigned long>(g[i]);
      modulus = static_cast<unsigned long>(prime);
      previous_lift.clear();
      continue;
    }

    // Combine with the running image: x = image + modulus * t, x = g (mod prime).
    const Word m_mod = mpz_fdiv_ui(modulus.get_mpz_t(), pu);
    const Word m_inv = inv_mod(m_mod, prime);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Word cur = mpz_fdiv_ui(image[i].get_mpz_t(), pu);
      const Word t = mul_mod((g[i] + prime - cur) % prime, m_inv, prime);
      image[i] += modulus * static_cast<unsigned long>(t);
    }
    modulus *= static_cast<unsigned long>(prime);

    std::vector<mpz_class> lift(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) lift[i] = symmetric(image[i], modulus);
    if (lift != previous_lift) {
      previous_lift = std::move(lift);
      continue;
    }
    const UPoly candidate = to_upoly(primitive_part(previous_lift));
    if (divides(candidate, pa) && divides(candidate, pb)) return candidate.monic();
  }
  return euclid_gcd(p, q);
}

UPoly euclid_gcd(const UPoly& p, const UPoly& q) {
  UPoly a = p.monic();
  UPoly b = q.monic();
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).remainder.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace rigiditykit::detail
