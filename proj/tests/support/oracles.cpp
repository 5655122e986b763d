#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "workbench/error.hpp"

namespace wb::oracle {

namespace {

int mod2(long long x) { return static_cast<int>(((x % 2) + 2) % 2); }

struct Interval {
  int lo, hi;
  int length() const { return hi - lo + 1; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool disjoint(const Interval& o) const { return hi < o.lo || o.hi < lo; }
};

std::string encode(const Interval& whole, const std::vector<Interval>& family) {
  std::vector<Interval> maximal;
  for (const auto& c : family) {
    if (!whole.contains(c) || c.length() == whole.length()) continue;
    const bool covered = std::any_of(family.begin(), family.end(), [&](const Interval& o) {
      return o.length() < whole.length() && whole.contains(o) && o.contains(c) && o.length() > c.length();
    });
    if (!covered) maximal.push_back(c);
  }
  std::string out = "(";
  int leaf = whole.lo;
  bool first = true;
  while (leaf <= whole.hi) {
    if (!first) out += ",";
    first = false;
    auto it = std::find_if(maximal.begin(), maximal.end(), [&](const Interval& c) { return c.lo == leaf; });
    if (it != maximal.end()) {
      out += encode(*it, family);
      leaf = it->hi + 1;
    } else {
      out += std::to_string(leaf);
      ++leaf;
    }
  }
  return out + ")";
}

std::vector<std::vector<int>> compositions_by_cuts(int d) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int pos = 1; pos < d; ++pos) {
      if (mask & (1u << (pos - 1))) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(parts);
  }
  return out;
}

int dagger_of(std::span<const int> mu) {
  long long s = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) s += static_cast<long long>(i + 1) * mu[i];
  return mod2(s);
}

int spade_of(std::span<const int> mu, int k) { return mod2(dagger_of(mu) + k); }

long long shifted_sum(std::span<const int> mu) {
  long long s = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) s += static_cast<long long>(i + 2) * mu[i];
  return s;
}

struct Split {
  std::vector<int> outer;
  std::vector<int> inner;
  long long tail = 0;
  long long ddag = 0;
};

Split split(std::span<const int> mu, int n, int m) {
  Split s;
  const int d = static_cast<int>(mu.size());
  int glued = m - 2;
  for (int l = n; l < n + m; ++l) glued += mu[l];
  s.outer.assign(mu.begin(), mu.begin() + n);
  s.outer.push_back(glued);
  s.outer.insert(s.outer.end(), mu.begin() + n + m, mu.end());
  s.inner.assign(mu.begin() + n, mu.begin() + n + m);
  for (int l = n + m; l < d; ++l) s.tail += mu[l];
  for (int l = 0; l < n; ++l) s.ddag += mu[l];
  s.ddag -= n;
  return s;
}

}  // namespace

std::set<std::string> laminar_tree_encodings(int k) {
  std::vector<Interval> candidates;
  for (int lo = 1; lo <= k; ++lo) {
    for (int hi = lo + 1; hi <= k; ++hi) {
      if (hi - lo + 1 < k) candidates.push_back({lo, hi});
    }
  }
  std::set<std::string> out;
  const std::size_t n = candidates.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Interval> family;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) family.push_back(candidates[i]);
    }
    bool laminar = true;
    for (std::size_t a = 0; a < family.size() && laminar; ++a) {
      for (std::size_t b = a + 1; b < family.size() && laminar; ++b) {
        laminar = family[a].disjoint(family[b]) || family[a].contains(family[b]) || family[b].contains(family[a]);
      }
    }
    if (laminar) out.insert(encode({1, k}, family));
  }
  return out;
}

long long tree_count_by_compositions(int k) {
  std::vector<long long> t(k + 1, 0);
  t[1] = 1;
  for (int size = 2; size <= k; ++size) {
    for (const auto& parts : compositions_by_cuts(size)) {
      if (parts.size() < 2) continue;
      long long prod = 1;
      for (int p : parts) prod *= t[p];
      t[size] += prod;
    }
  }
  return t[k];
}

std::vector<RelationTerm> functor_terms(int d) {
  std::vector<RelationTerm> out;
  for (int n = 0; n < d; ++n) {
    for (int m = 1; n + m <= d; ++m) out.push_back({TermFamily::functor, TermKind::inner, d, n, m, {}, 0});
  }
  for (auto& parts : compositions_by_cuts(d)) out.push_back({TermFamily::functor, TermKind::outer, d, 0, 0, parts, 0});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RelationTerm> homotopy_terms(int d) {
  std::vector<RelationTerm> out;
  for (int n = 0; n < d; ++n) {
    for (int m = 1; n + m <= d; ++m) out.push_back({TermFamily::homotopy, TermKind::inner, d, n, m, {}, 0});
  }
  for (auto& parts : compositions_by_cuts(d)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out.push_back({TermFamily::homotopy, TermKind::outer, d, 0, 0, parts, static_cast<int>(i + 1)});
    }
  }
  out.push_back({TermFamily::homotopy, TermKind::endpoint_f, d, 0, 0, {}, 0});
  out.push_back({TermFamily::homotopy, TermKind::endpoint_g, d, 0, 0, {}, 0});
  std::sort(out.begin(), out.end());
  return out;
}

long long functor_term_count(int d) { return d * (d + 1) / 2 + (1LL << (d - 1)); }

long long homotopy_term_count(int d) {
  const long long marked = d == 1 ? 1 : (d + 1) * (1LL << (d - 2));
  return d * (d + 1) / 2 + marked + 2;
}

SignSides m_identity(std::span<const int> mu, int n, int m) {
  const int d = static_cast<int>(mu.size());
  const Split s = split(mu, n, m);
  const long long square = static_cast<long long>(m) * (d - m - 1) + m * s.tail;
  const long long triangle = static_cast<long long>(m) * (d - n) + m + n;
  return {mod2(dagger_of(s.outer) + dagger_of(s.inner) + square + triangle), mod2(s.ddag + shifted_sum(mu))};
}

SignSides f_identity(std::span<const int> mu, int n, int m) {
  const int d = static_cast<int>(mu.size());
  const Split s = split(mu, n, m);
  const long long square = static_cast<long long>(m) * (d - m) + m * s.tail;
  const long long triangle = static_cast<long long>(m) * (d - n) + m + n;
  return {mod2(square + triangle + dagger_of(s.inner) + spade_of(s.outer, d - m + 1)),
          mod2(s.ddag + 1 + shifted_sum(mu) + d)};
}

SignSides fprime_identity(std::span<const int> mu, std::span<const int> partition) {
  const int d = static_cast<int>(mu.size());
  const int blocks = static_cast<int>(partition.size());
  std::vector<int> glued;
  long long spades = 0;
  int pos = 0;
  for (int s : partition) {
    const std::span<const int> block = mu.subspan(pos, s);
    int deg = s - 1;
    for (int x : block) deg += x;
    glued.push_back(deg);
    spades += spade_of(block, s);
    pos += s;
  }
  long long sum_primes = 0, pair_sum = 0, prefix_term = 0, prefix = 0;
  for (int i = 0; i < blocks; ++i) {
    sum_primes += partition[i] - 1;
    for (int j = i; j < blocks; ++j) pair_sum += static_cast<long long>(partition[i] - 1) * (partition[j] - 1);
  }
  for (int i = 0; i + 1 < blocks; ++i) {
    prefix += partition[i] - 1;
    prefix_term += prefix * glued[i + 1];
  }
  const long long square = sum_primes * blocks + pair_sum + prefix_term;
  const long long triangle = static_cast<long long>(d) * blocks + d + pair_sum;
  return {mod2(square + triangle + dagger_of(glued) + spades), mod2(shifted_sum(mu) + d)};
}

FdBeta finite_difference_beta(const slit::SlitDomain& domain, std::complex<double> z, double step) {
  const std::complex<double> dx(step, 0), dy(0, step);
  const auto fx = (slit::map_value(domain, z + dx) - slit::map_value(domain, z - dx)) / (2 * step);
  const auto fy = (slit::map_value(domain, z + dy) - slit::map_value(domain, z - dy)) / (2 * step);
  return {fx.imag(), fy.imag(), fx.real(), fy.real()};
}

long long lattice_count(const Eigen::MatrixXd& gram, double cutoff, int box) {
  const int dim = static_cast<int>(gram.rows());
  long long count = 0;
  std::vector<int> v(dim, -box);
  while (true) {
    Eigen::VectorXd x(dim);
    bool zero = true;
    for (int i = 0; i < dim; ++i) {
      x(i) = v[i];
      zero = zero && v[i] == 0;
    }
    if (!zero && -0.5 * x.dot(gram * x) >= cutoff - 1e-12) ++count;
    int i = 0;
    while (i < dim && v[i] == box) v[i++] = -box;
    if (i == dim) break;
    ++v[i];
  }
  return count;
}

int unitary_path_twice_index(std::span<const Eigen::MatrixXd> coeffs, double t0, double t1) {
  auto levels = [&](double t) {
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(coeffs[0].rows(), coeffs[0].cols());
    double power = 1;
    for (const auto& c : coeffs) {
      s += power * c;
      power *= t;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s);
    long long total = 0;
    for (double lambda : eig.eigenvalues()) {
      const double q = lambda / std::numbers::pi;
      const double nearest = std::round(q);
      const double snapped = std::abs(q - nearest) < 1e-9 ? nearest : q;
      total += static_cast<long long>(std::floor(snapped) + std::ceil(snapped));
    }
    return total;
  };
  return static_cast<int>(levels(t1) - levels(t0));
}

ainfty::Homotopy random_homotopy(const ainfty::Category& cat, std::uint64_t seed, int k_max) {
  using namespace ainfty;
  std::mt19937_64 rng(seed);
  Homotopy h;
  h.name = "H";
  for (int r = 1; r <= k_max; ++r) {
    MultilinearMap& hr = h.h.at(r);
    for (const Word& w : composable_words(cat.basis, r)) {
      if (static_cast<int>(w.size()) != r) continue;
      int target = degree_shift(FamilyKind::homotopy, r);
      for (std::size_t i : w) target += cat.basis[i].degree;
      for (std::size_t o : cat.basis.hom(cat.basis[w.front()].source, cat.basis[w.back()].target)) {
        if (cat.basis[o].degree != target || rng() % 2 == 0) continue;
        hr.add(w, o, rng() % 2 == 0 ? 1 : -1);
      }
    }
  }
  return h;
}

ainfty::Functor solve_homotopic_functor(const ainfty::Homotopy& h, const ainfty::Functor& f,
                                        const ainfty::Category& src, const ainfty::Category& dst, int k_max) {
  ainfty::Functor g;
  g.name = "G";
  g.object_map = f.object_map;
  for (int d = 1; d <= k_max; ++d) {
    g.f.at(d);
    const auto rep = ainfty::verify_homotopy(h, f, g, src, dst, d);
    for (const auto& e : rep.nonzero) {
      if (e.arity == d) g.f.at(d).add(e.inputs, e.output, e.value);
    }
  }
  return g;
}

}  // namespace wb::oracle
