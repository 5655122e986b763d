#include <numeric>

#include "workbench/error.hpp"
#include "workbench/signs.hpp"

namespace wb::signs {

namespace {

long long tail_sum(Degrees mu, int from) {
  long long s = 0;
  for (std::size_t i = static_cast<std::size_t>(from); i < mu.size(); ++i) s += mu[i];
  return s;
}

void check_split(int d, int n, int m) {
  if (d < 1 || m < 1 || n < 0 || n + m > d) throw Error(Errc::index_range, "split (n, m) out of range for arity d");
}

}  // namespace

void check_partition(std::span<const int> partition, int d) {
  if (partition.empty()) throw Error(Errc::malformed_partition, "empty partition");
  long long total = 0;
  for (int s : partition) {
    if (s < 1) throw Error(Errc::malformed_partition, "partition parts must be positive");
    total += s;
  }
  if (total != d) throw Error(Errc::malformed_partition, "partition does not sum to the arity");
}

Parity dagger(Degrees mu) {
  long long s = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) s += static_cast<long long>(i + 1) * mu[i];
  return parity(s);
}

Parity ddagger(Degrees mu, int n) {
  if (n < 0 || n > static_cast<int>(mu.size())) throw Error(Errc::index_range, "ddagger: n out of range");
  long long s = -n;
  for (int i = 0; i < n; ++i) s += mu[i];
  return parity(s);
}

Parity spade(Degrees mu, int k) { return dagger(mu) ^ parity(k); }

Parity club(Degrees mu, std::span<const int> partition, int i, ClubReading reading) {
  check_partition(partition, static_cast<int>(mu.size()));
  if (i < 1 || i > static_cast<int>(partition.size())) throw Error(Errc::index_range, "club: marked index out of range");
  const int before = std::accumulate(partition.begin(), partition.begin() + (i - 1), 0);
  long long s = 0;
  for (int l = 0; l < before; ++l) s += mu[l];
  if (reading == ClubReading::prefix_parts) {
    s -= before;
  } else {
    s -= static_cast<long long>(i - 1) * partition.back();
  }
  return parity(s);
}

Parity square_m(Degrees mu, int d, int n, int m) {
  check_split(d, n, m);
  return parity(static_cast<long long>(m) * (d - m - 1) + m * tail_sum(mu, n + m));
}

Parity triangle(int d, int n, int m) {
  check_split(d, n, m);
  return parity(static_cast<long long>(m) * (d - n) + m + n);
}

Parity square_f(Degrees mu, int d, int n, int m) {
  check_split(d, n, m);
  return parity(static_cast<long long>(m) * (d - m) + m * tail_sum(mu, n + m));
}

Parity square_fprime(Degrees mu, std::span<const int> partition) {
  check_partition(partition, static_cast<int>(mu.size()));
  const int parts = static_cast<int>(partition.size());
  std::vector<long long> sp, y;
  int pos = 0;
  for (int s : partition) {
    sp.push_back(s - 1);
    long long deg = s - 1;
    for (int l = pos; l < pos + s; ++l) deg += mu[l];
    y.push_back(deg);
    pos += s;
  }
  long long total = std::accumulate(sp.begin(), sp.end(), 0LL) * parts;
  for (int i = 0; i < parts; ++i) {
    for (int j = i; j < parts; ++j) total += sp[i] * sp[j];
  }
  long long prefix = 0;
  for (int i = 0; i + 1 < parts; ++i) {
    prefix += sp[i];
    total += prefix * y[i + 1];
  }
  return parity(total);
}

Parity triangle_partition(int d, std::span<const int> partition) {
  check_partition(partition, d);
  const long long parts = static_cast<long long>(partition.size());
  long long total = d * parts + d;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    for (std::size_t j = i; j < partition.size(); ++j) total += static_cast<long long>(partition[i] - 1) * (partition[j] - 1);
  }
  return parity(total);
}

}  // namespace wb::signs
