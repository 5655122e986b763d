#include <Eigen/Dense>
#include <cmath>
#include <functional>

#include "workbench/ainfty.hpp"
#include "workbench/error.hpp"

namespace wb::ainfty {

namespace {

using signs::Parity;

// Multilinear extension of a family to a tuple of vectors.
Vec apply_multi(const MapFamily& fam, const std::vector<Vec>& args) {
  Vec out;
  for (const Vec& a : args) {
    if (a.empty()) return out;
  }
  if (!fam.get(static_cast<int>(args.size()))) return out;
  Word w(args.size());
  std::function<void(std::size_t, Coeff)> rec = [&](std::size_t i, Coeff c) {
    if (i == args.size()) {
      axpy(out, c, fam.apply(w));
      return;
    }
    for (const auto& [idx, coeff] : args[i]) {
      w[i] = idx;
      rec(i + 1, c * coeff);
    }
  };
  rec(0, 1);
  return out;
}

Parity inner_sign(InnerSign rule, const std::vector<int>& mu, int n) {
  switch (rule) {
    case InnerSign::prefix: return signs::ddagger(mu, n);
    case InnerSign::weighted: return signs::dagger(mu);
    case InnerSign::weighted_plus_arity: return signs::dagger(mu) ^ signs::parity(static_cast<long long>(mu.size()));
  }
  return Parity::even;
}

// sum over (n, m) of sign * outer(x1..xn, m^m(x_{n+1}..x_{n+m}), ...)
Vec inner_sum(const MapFamily& outer, const MapFamily& m, const GradedHom& basis, const Word& x, InnerSign rule) {
  const int d = static_cast<int>(x.size());
  const std::vector<int> mu = degrees(basis, x);
  Vec out;
  for (int len = 1; len <= d; ++len) {
    for (int n = 0; n + len <= d; ++n) {
      const Vec& inner = m.apply(Word(x.begin() + n, x.begin() + n + len));
      if (inner.empty()) continue;
      const Coeff s = signs::sign(inner_sign(rule, mu, n));
      Word w(x.begin(), x.begin() + n);
      w.push_back(0);
      w.insert(w.end(), x.begin() + n + len, x.end());
      for (const auto& [y, c] : inner) {
        w[n] = y;
        axpy(out, s * c, outer.apply(w));
      }
    }
  }
  return out;
}

void compositions(int d, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& visit) {
  if (d == 0) {
    visit(cur);
    return;
  }
  for (int p = 1; p <= d; ++p) {
    cur.push_back(p);
    compositions(d - p, cur, visit);
    cur.pop_back();
  }
}

std::vector<Vec> blocks(const std::vector<int>& parts, const Word& x,
                        const std::function<const MapFamily&(std::size_t slot)>& family) {
  std::vector<Vec> args;
  std::size_t pos = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    args.push_back(family(j).apply(Word(x.begin() + pos, x.begin() + pos + parts[j])));
    pos += parts[j];
  }
  return args;
}

void record(ResidualReport& rep, const Word& x, const Vec& v) {
  ++rep.tuples;
  for (const auto& [o, c] : v) rep.nonzero.push_back({static_cast<int>(x.size()), x, o, c});
}

void check_cap(int k_max) {
  if (k_max < 1) throw Error(Errc::invalid_arity, "k_max must be at least 1");
}

}  // namespace

ResidualReport verify_ainfty(const Category& cat, int k_max) {
  check_cap(k_max);
  check_category(cat);
  ResidualReport rep{"ainfty", k_max, 0, {}};
  for (const Word& x : composable_words(cat.basis, k_max)) {
    record(rep, x, inner_sum(cat.m, cat.m, cat.basis, x, InnerSign::prefix));
  }
  return rep;
}

ResidualReport verify_functor(const Functor& f, const Category& src, const Category& dst, int k_max) {
  check_cap(k_max);
  check_category(src);
  check_category(dst);
  check_functor(f, src, dst);
  ResidualReport rep{"functor", k_max, 0, {}};
  for (const Word& x : composable_words(src.basis, k_max)) {
    Vec r;
    axpy(r, -1, inner_sum(f.f, src.m, src.basis, x, InnerSign::prefix));
    std::vector<int> cur;
    compositions(static_cast<int>(x.size()), cur, [&](const std::vector<int>& parts) {
      axpy(r, 1, apply_multi(dst.m, blocks(parts, x, [&](std::size_t) -> const MapFamily& { return f.f; })));
    });
    record(rep, x, r);
  }
  return rep;
}

ResidualReport verify_homotopy(const Homotopy& h, const Functor& f, const Functor& g, const Category& src,
                               const Category& dst, int k_max, const HomotopySigns& convention) {
  check_cap(k_max);
  check_category(src);
  check_category(dst);
  check_functor(f, src, dst);
  check_functor(g, src, dst);
  if (f.object_map != g.object_map) throw Error(Errc::composability, "homotopy between functors with different object maps");
  check_homotopy(h, f, src, dst);
  ResidualReport rep{"homotopy", k_max, 0, {}};
  for (const Word& x : composable_words(src.basis, k_max)) {
    const std::vector<int> mu = degrees(src.basis, x);
    Vec r = f.f.apply(x);
    axpy(r, -1, g.f.apply(x));
    axpy(r, -1, inner_sum(h.h, src.m, src.basis, x, convention.inner));
    std::vector<int> cur;
    compositions(static_cast<int>(x.size()), cur, [&](const std::vector<int>& parts) {
      for (std::size_t i = 1; i <= parts.size(); ++i) {
        auto fam = [&](std::size_t slot) -> const MapFamily& {
          return slot + 1 < i ? f.f : (slot + 1 == i ? h.h : g.f);
        };
        const Coeff s = signs::sign(signs::club(mu, parts, static_cast<int>(i), convention.club));
        axpy(r, -s, apply_multi(dst.m, blocks(parts, x, fam)));
      }
    });
    record(rep, x, r);
  }
  return rep;
}

Functor compose_functors(const Functor& f2, const Functor& f1, const Category& a, const Category& b, const Category& c,
                         int k_max) {
  check_cap(k_max);
  check_functor(f1, a, b);
  check_functor(f2, b, c);
  Functor out;
  out.name = f2.name + "*" + f1.name;
  for (const auto& [o, image] : f1.object_map) out.object_map[o] = f2.object_map.at(image);
  for (const Word& x : composable_words(a.basis, k_max)) {
    Vec v;
    std::vector<int> cur;
    compositions(static_cast<int>(x.size()), cur, [&](const std::vector<int>& parts) {
      axpy(v, 1, apply_multi(f2.f, blocks(parts, x, [&](std::size_t) -> const MapFamily& { return f1.f; })));
    });
    if (!v.empty()) out.f.at(static_cast<int>(x.size())).set(x, std::move(v));
  }
  return out;
}

namespace {

std::vector<Vec> integer_inverse(const MultilinearMap& one, std::size_t size) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
  for (const auto& [w, v] : one.table()) {
    for (const auto& [o, c] : v) a(static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(w[0])) = static_cast<double>(c);
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  if (!lu.isInvertible()) throw Error(Errc::invalid_input, "pushforward needs an invertible f^1");
  const Eigen::MatrixXd inv = lu.inverse();
  std::vector<Vec> out(size);
  for (std::size_t col = 0; col < size; ++col) {
    for (std::size_t row = 0; row < size; ++row) {
      const double x = inv(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
      const double r = std::round(x);
      if (std::abs(x - r) > 1e-9) throw Error(Errc::invalid_input, "f^1 is not invertible over Z");
      if (r != 0) out[col][row] = static_cast<Coeff>(r);
    }
  }
  for (std::size_t b = 0; b < size; ++b) {
    Vec image;
    for (const auto& [x, c] : out[b]) axpy(image, c, one.find({x}) ? *one.find({x}) : Vec{});
    if (image != Vec{{b, 1}}) throw Error(Errc::invalid_input, "f^1 is not invertible over Z");
  }
  return out;
}

}  // namespace

Category pushforward(const Category& src, const Functor& f, int k_max) {
  check_cap(k_max);
  check_category(src);
  for (const std::string& o : src.objects) {
    auto it = f.object_map.find(o);
    if (it == f.object_map.end() || it->second != o) throw Error(Errc::composability, "pushforward needs the identity object map");
  }
  check_functor(f, src, src);
  const MultilinearMap* one = f.f.get(1);
  if (!one) throw Error(Errc::invalid_input, "pushforward needs f^1");
  const std::vector<Vec> inverse = integer_inverse(*one, src.basis.size());

  Category out;
  out.name = f.name + "_*" + src.name;
  out.objects = src.objects;
  out.basis = src.basis;
  for (int r = 1; r <= k_max; ++r) {
    out.m.at(r);
    std::map<Word, Vec> image;  // m_out^r(f^1 x_1, ..., f^1 x_r)
    for (const Word& x : composable_words(src.basis, r)) {
      if (static_cast<int>(x.size()) != r) continue;
      Vec v = inner_sum(f.f, src.m, src.basis, x, InnerSign::prefix);
      std::vector<int> cur;
      compositions(r, cur, [&](const std::vector<int>& parts) {
        if (static_cast<int>(parts.size()) == r) return;
        axpy(v, -1, apply_multi(out.m, blocks(parts, x, [&](std::size_t) -> const MapFamily& { return f.f; })));
      });
      if (!v.empty()) image[x] = std::move(v);
    }
    for (const Word& b : composable_words(out.basis, r)) {
      if (static_cast<int>(b.size()) != r) continue;
      Vec total;
      Word x(r);
      std::function<void(int, Coeff)> rec = [&](int i, Coeff c) {
        if (i == r) {
          auto it = image.find(x);
          if (it != image.end()) axpy(total, c, it->second);
          return;
        }
        for (const auto& [xi, ci] : inverse[b[i]]) {
          x[i] = xi;
          rec(i + 1, c * ci);
        }
      };
      rec(0, 1);
      if (!total.empty()) out.m.at(r).set(b, std::move(total));
    }
  }
  return out;
}

}  // namespace wb::ainfty
