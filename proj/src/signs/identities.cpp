#include <algorithm>
#include <functional>

#include "workbench/error.hpp"
#include "workbench/signs.hpp"

namespace wb::signs {

namespace {

int sum_shifted(Degrees mu) {
  long long s = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) s += static_cast<long long>(i + 2) * mu[i];
  return bit(parity(s));
}

void partitions(int d, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (d == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = 1; p <= d; ++p) {
    cur.push_back(p);
    partitions(d - p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::string_view identity_name(Identity id) {
  switch (id) {
    case Identity::m_composition: return "m";
    case Identity::f_composition: return "f";
    case Identity::fprime_composition: return "fprime";
  }
  return "?";
}

std::optional<Identity> parse_identity(std::string_view s) {
  if (s == "m") return Identity::m_composition;
  if (s == "f") return Identity::f_composition;
  if (s == "fprime") return Identity::fprime_composition;
  return std::nullopt;
}

Counterexample evaluate_identity(Identity which, std::span<const int> mu, int n, int m, std::span<const int> partition,
                                 Corruption corruption) {
  Counterexample c;
  const int d = static_cast<int>(mu.size());
  c.d = d;
  c.mu.assign(mu.begin(), mu.end());
  auto keep = [&](const char* name, Parity p) {
    const bool dropped = (corruption == Corruption::drop_triangle && std::string_view(name).starts_with("triangle")) ||
                         (corruption == Corruption::drop_square && std::string_view(name).starts_with("square"));
    c.terms[name] = bit(p);
    if (!dropped) c.lhs ^= bit(p);
  };
  if (which == Identity::fprime_composition) {
    check_partition(partition, d);
    c.partition.assign(partition.begin(), partition.end());
    int pos = 0;
    Parity spades = Parity::even;
    for (int s : partition) {
      int deg = s - 1;
      for (int l = pos; l < pos + s; ++l) deg += mu[l];
      c.glued.push_back(deg);
      spades ^= spade(mu.subspan(pos, s), s);
      pos += s;
    }
    keep("square_fprime", square_fprime(mu, partition));
    keep("triangle", triangle_partition(d, partition));
    keep("dagger_u0", dagger(c.glued));
    keep("spade_sum", spades);
    c.rhs = sum_shifted(mu) ^ (d & 1);
    return c;
  }
  if (m < 1 || n < 0 || n + m > d) throw Error(Errc::index_range, "split (n, m) out of range");
  c.n = n;
  c.m = m;
  int glued = m - 2;
  for (int l = n; l < n + m; ++l) glued += mu[l];
  c.glued = {glued};
  std::vector<int> outer(mu.begin(), mu.begin() + n);
  outer.push_back(glued);
  outer.insert(outer.end(), mu.begin() + n + m, mu.end());
  const Degrees inner = mu.subspan(n, m);
  if (which == Identity::m_composition) {
    keep("dagger_u1", dagger(outer));
    keep("dagger_u2", dagger(inner));
    keep("square_m", square_m(mu, d, n, m));
    keep("triangle", triangle(d, n, m));
    c.rhs = bit(ddagger(mu, n)) ^ sum_shifted(mu);
  } else {
    keep("square_f", square_f(mu, d, n, m));
    keep("triangle", triangle(d, n, m));
    keep("dagger_u1", dagger(inner));
    keep("spade_u0", spade(outer, d - m + 1));
    c.rhs = bit(ddagger(mu, n)) ^ 1 ^ sum_shifted(mu) ^ (d & 1);
  }
  return c;
}

IdentityResult verify_identity(Identity which, DegreeRange range, int d_max, Corruption corruption) {
  if (range.hi < range.lo) throw Error(Errc::invalid_input, "empty degree range");
  if (d_max < 1) throw Error(Errc::invalid_input, "d_max must be at least 1");
  IdentityResult res{which, range, d_max, 0, std::nullopt};
  for (int d = 1; d <= d_max && !res.counterexample; ++d) {
    std::vector<std::vector<int>> splits;  // (n, m) pairs or partitions
    if (which == Identity::fprime_composition) {
      std::vector<int> cur;
      partitions(d, cur, splits);
    } else {
      for (int n = 0; n < d; ++n) {
        for (int m = 1; n + m <= d; ++m) splits.push_back({n, m});
      }
    }
    std::sort(splits.begin(), splits.end());
    for (const auto& split : splits) {
      std::vector<int> mu(d, range.lo);
      while (true) {
        ++res.cases;
        const Counterexample c = which == Identity::fprime_composition
                                     ? evaluate_identity(which, mu, 0, 0, split, corruption)
                                     : evaluate_identity(which, mu, split[0], split[1], {}, corruption);
        if (c.lhs != c.rhs) {
          res.counterexample = c;
          return res;
        }
        int pos = d - 1;
        while (pos >= 0 && mu[pos] == range.hi) mu[pos--] = range.lo;
        if (pos < 0) break;
        ++mu[pos];
      }
    }
  }
  return res;
}

}  // namespace wb::signs
