#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sepsys {

enum class Strategy { GreedyMax, GreedyMin, SeededRandom };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

/// n = p_1 + ... + p_m + b with each remainder n - s_k at most (p_k - 3) / 2.
struct Decomposition {
  long long n = 0;
  std::vector<long long> primes;
  std::vector<long long> partial_sums;
  long long b = 0;

  std::size_t levels() const noexcept { return primes.size(); }
  long long s(std::size_t k) const { return k == 0 ? 0 : partial_sums[k - 1]; }
};

bool is_prime(std::uint64_t x);

/// Primes p with r - p <= (p - 3) / 2 and r - p >= 3.
struct PrimeWindow {
  long long lo;
  long long hi;
};
PrimeWindow feasibility_window(long long r);

/// Smallest n accepted by decompose().
inline constexpr long long kMinDecomposableN = 14;

Decomposition decompose(long long n, Strategy strategy = Strategy::GreedyMax,
                        std::uint64_t seed = 0);

/// Empty when every invariant holds, otherwise the first violation.
std::optional<std::string> check_decomposition(const Decomposition& d);

}  // namespace sepsys
