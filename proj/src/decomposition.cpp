#include "sepsys/decomposition.hpp"

#include <random>

#include "sepsys/error.hpp"

namespace sepsys {

namespace {

constexpr std::uint64_t kSieveLimit = 1u << 24;

const std::vector<bool>& small_sieve() {
  static const std::vector<bool> sieve = [] {
    std::vector<bool> s(kSieveLimit, true);
    s[0] = s[1] = false;
    for (std::uint64_t i = 2; i * i < kSieveLimit; ++i) {
      if (!s[i]) continue;
      for (std::uint64_t j = i * i; j < kSieveLimit; j += i) s[j] = false;
    }
    return s;
  }();
  return sieve;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic for all 64-bit inputs with these bases.
bool miller_rabin(std::uint64_t n) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % a == 0) return n == a;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<long long> primes_in(PrimeWindow w) {
  std::vector<long long> out;
  for (long long x = w.lo; x <= w.hi; ++x) {
    if (x % 2 == 1 && is_prime(static_cast<std::uint64_t>(x))) out.push_back(x);
  }
  return out;
}

std::optional<long long> pick_prime(PrimeWindow w, Strategy strategy,
                                    std::mt19937_64& rng) {
  if (w.lo > w.hi) return std::nullopt;
  switch (strategy) {
    case Strategy::GreedyMax:
      for (long long x = w.hi; x >= w.lo; --x) {
        if (x % 2 == 1 && is_prime(static_cast<std::uint64_t>(x))) return x;
      }
      return std::nullopt;
    case Strategy::GreedyMin:
      for (long long x = w.lo; x <= w.hi; ++x) {
        if (x % 2 == 1 && is_prime(static_cast<std::uint64_t>(x))) return x;
      }
      return std::nullopt;
    case Strategy::SeededRandom: {
      auto candidates = primes_in(w);
      if (candidates.empty()) return std::nullopt;
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      return candidates[pick(rng)];
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::GreedyMax: return "greedy_max";
    case Strategy::GreedyMin: return "greedy_min";
    case Strategy::SeededRandom: return "seeded_random";
  }
  return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "greedy_max") return Strategy::GreedyMax;
  if (name == "greedy_min") return Strategy::GreedyMin;
  if (name == "seeded_random") return Strategy::SeededRandom;
  return std::nullopt;
}

bool is_prime(std::uint64_t x) {
  if (x < kSieveLimit) return small_sieve()[x];
  return miller_rabin(x);
}

PrimeWindow feasibility_window(long long r) {
  return PrimeWindow{(2 * r + 3 + 2) / 3, r - 3};
}

Decomposition decompose(long long n, Strategy strategy, std::uint64_t seed) {
  if (n < kMinDecomposableN) {
    throw Error(ErrorCode::TooSmall,
                "n = " + std::to_string(n) + " is below " +
                    std::to_string(kMinDecomposableN));
  }
  std::mt19937_64 rng(seed);
  Decomposition d;
  d.n = n;
  long long r = n;
  long long sum = 0;
  // Remainders 14..18 take one more level whenever their window has a prime;
  // 19 never does, and anything from 20 up must.
  while (r >= kMinDecomposableN) {
    auto p = pick_prime(feasibility_window(r), strategy, rng);
    if (!p) {
      if (r >= 20) {
        throw Error(ErrorCode::DecompositionFailed,
                    "no prime in the window of remainder " + std::to_string(r));
      }
      break;
    }
    d.primes.push_back(*p);
    sum += *p;
    d.partial_sums.push_back(sum);
    r -= *p;
  }
  if (d.primes.empty()) {
    throw Error(ErrorCode::DecompositionFailed,
                "n = " + std::to_string(n) + " admits no level");
  }
  d.b = r;
  return d;
}

std::optional<std::string> check_decomposition(const Decomposition& d) {
  if (d.primes.size() != d.partial_sums.size()) return "partial sums length mismatch";
  long long sum = 0;
  for (std::size_t k = 0; k < d.primes.size(); ++k) {
    const long long p = d.primes[k];
    if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p))) {
      return "p_" + std::to_string(k + 1) + " = " + std::to_string(p) +
             " is not an odd prime";
    }
    sum += p;
    if (d.partial_sums[k] != sum) return "partial sum s_" + std::to_string(k + 1);
    if (2 * (d.n - sum) > p - 3) {
      return "n - s_" + std::to_string(k + 1) + " exceeds (p - 3) / 2";
    }
  }
  if (d.b != d.n - sum) return "b != n - s_m";
  if (!d.primes.empty() && (d.b < 3 || d.b > 19)) {
    return "b = " + std::to_string(d.b) + " outside [3, 19]";
  }
  return std::nullopt;
}

}  // namespace sepsys
