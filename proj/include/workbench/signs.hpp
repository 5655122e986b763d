#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wb::signs {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator^(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr Parity& operator^=(Parity& a, Parity b) { return a = a ^ b; }
constexpr Parity parity(long long x) { return (x % 2 == 0) ? Parity::even : Parity::odd; }
constexpr int bit(Parity p) { return static_cast<int>(p); }
constexpr long long sign(Parity p) { return p == Parity::even ? 1 : -1; }

using Degrees = std::span<const int>;

Parity dagger(Degrees mu);
Parity ddagger(Degrees mu, int n);
Parity spade(Degrees mu, int k);

// prefix_parts: subtract s_1 + ... + s_{i-1};  last_part: subtract (i-1) * s_r.
enum class ClubReading { prefix_parts, last_part };
Parity club(Degrees mu, std::span<const int> partition, int i, ClubReading reading = ClubReading::prefix_parts);

Parity square_m(Degrees mu, int d, int n, int m);
Parity triangle(int d, int n, int m);
Parity square_f(Degrees mu, int d, int n, int m);
// Glued degrees mu(y^j) are derived from mu and the partition.
Parity square_fprime(Degrees mu, std::span<const int> partition);
Parity triangle_partition(int d, std::span<const int> partition);

void check_partition(std::span<const int> partition, int d);

enum class Identity { m_composition, f_composition, fprime_composition };
std::string_view identity_name(Identity id);
std::optional<Identity> parse_identity(std::string_view s);

// Drops one named summand from the left-hand side, for negative controls.
enum class Corruption { none, drop_triangle, drop_square };

struct DegreeRange {
  int lo = 0;
  int hi = 1;
};

struct Counterexample {
  int d = 0;
  int n = 0;
  int m = 0;
  std::vector<int> partition;
  std::vector<int> mu;
  std::vector<int> glued;
  std::map<std::string, int> terms;
  int lhs = 0;
  int rhs = 0;
};

struct IdentityResult {
  Identity identity = Identity::m_composition;
  DegreeRange range;
  int d_max = 0;
  long long cases = 0;
  std::optional<Counterexample> counterexample;
  bool pass() const { return !counterexample; }
};

IdentityResult verify_identity(Identity which, DegreeRange range, int d_max, Corruption corruption = Corruption::none);

// Evaluates a single instance; split is (n, m) or a partition depending on the identity.
Counterexample evaluate_identity(Identity which, std::span<const int> mu, int n, int m, std::span<const int> partition,
                                 Corruption corruption = Corruption::none);

}  // namespace wb::signs
