#include <algorithm>
#include <functional>

#include "workbench/ainfty.hpp"
#include "workbench/error.hpp"

namespace wb::ainfty {

std::size_t GradedHom::add(Generator g) {
  if (g.id.empty()) throw Error(Errc::invalid_input, "generator without id");
  if (lookup_.contains(g.id)) throw Error(Errc::invalid_input, "duplicate generator id '" + g.id + "'");
  lookup_[g.id] = basis_.size();
  basis_.push_back(std::move(g));
  return basis_.size() - 1;
}

std::size_t GradedHom::index(std::string_view id) const {
  auto it = lookup_.find(std::string(id));
  if (it == lookup_.end()) throw Error(Errc::invalid_input, "unknown generator '" + std::string(id) + "'");
  return it->second;
}

std::map<int, std::vector<std::size_t>> GradedHom::by_degree() const {
  std::map<int, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < basis_.size(); ++i) out[basis_[i].degree].push_back(i);
  return out;
}

std::vector<std::size_t> GradedHom::hom(std::string_view source, std::string_view target) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].source == source && basis_[i].target == target) out.push_back(i);
  }
  return out;
}

void axpy(Vec& y, Coeff a, const Vec& x) {
  if (a == 0) return;
  for (const auto& [i, c] : x) {
    const Coeff v = (y[i] += a * c);
    if (v == 0) y.erase(i);
  }
}

void MultilinearMap::add(const Word& inputs, std::size_t output, Coeff c) {
  if (static_cast<int>(inputs.size()) != arity_) throw Error(Errc::invalid_arity, "table entry with wrong arity");
  if (c == 0) return;
  Vec& v = table_[inputs];
  if ((v[output] += c) == 0) v.erase(output);
  if (v.empty()) table_.erase(inputs);
}

void MultilinearMap::set(const Word& inputs, Vec value) {
  if (static_cast<int>(inputs.size()) != arity_) throw Error(Errc::invalid_arity, "table entry with wrong arity");
  std::erase_if(value, [](const auto& kv) { return kv.second == 0; });
  if (value.empty()) {
    table_.erase(inputs);
  } else {
    table_[inputs] = std::move(value);
  }
}

const Vec* MultilinearMap::find(const Word& inputs) const {
  auto it = table_.find(inputs);
  return it == table_.end() ? nullptr : &it->second;
}

MultilinearMap& MapFamily::at(int arity) {
  if (arity < 1) throw Error(Errc::invalid_arity, "arity must be positive");
  while (cap() < arity) maps_.emplace_back(cap() + 1);
  return maps_[arity - 1];
}

const MultilinearMap* MapFamily::get(int arity) const {
  if (arity < 1 || arity > cap()) return nullptr;
  return &maps_[arity - 1];
}

const Vec& MapFamily::apply(const Word& inputs) const {
  static const Vec zero;
  const MultilinearMap* m = get(static_cast<int>(inputs.size()));
  if (!m) return zero;
  const Vec* v = m->find(inputs);
  return v ? *v : zero;
}

int degree_shift(FamilyKind kind, int arity) {
  switch (kind) {
    case FamilyKind::structure: return 2 - arity;
    case FamilyKind::functor: return 1 - arity;
    case FamilyKind::homotopy: return -arity;
  }
  return 0;
}

std::vector<Word> composable_words(const GradedHom& basis, int max_length) {
  std::vector<Word> out;
  Word cur;
  std::function<void()> rec = [&] {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_length) return;
    const std::string& at = basis[cur.back()].target;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].source != at) continue;
      cur.push_back(i);
      rec();
      cur.pop_back();
    }
  };
  if (max_length < 1) return out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    cur = {i};
    rec();
  }
  std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<int> degrees(const GradedHom& basis, const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (std::size_t i : w) out.push_back(basis[i].degree);
  return out;
}

namespace {

std::string word_text(const GradedHom& basis, const Word& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += basis[w[i]].id;
  }
  return s + ")";
}

const std::string& mapped(const std::map<std::string, std::string>* objects, const std::string& o) {
  if (!objects) return o;
  auto it = objects->find(o);
  if (it == objects->end()) throw Error(Errc::composability, "object '" + o + "' missing from the object map");
  return it->second;
}

void check_family(const MapFamily& fam, FamilyKind kind, const GradedHom& in, const GradedHom& out,
                  const std::map<std::string, std::string>* objects, const std::string& what) {
  for (int a = 1; a <= fam.cap(); ++a) {
    for (const auto& [word, value] : fam.get(a)->table()) {
      for (std::size_t i : word) {
        if (i >= in.size()) throw Error(Errc::composability, what + ": input index out of range");
      }
      for (std::size_t j = 0; j + 1 < word.size(); ++j) {
        if (in[word[j]].target != in[word[j + 1]].source) {
          throw Error(Errc::composability, what + ": ill-typed input tuple " + word_text(in, word));
        }
      }
      int deg = degree_shift(kind, a);
      for (std::size_t i : word) deg += in[i].degree;
      const std::string& src = mapped(objects, in[word.front()].source);
      const std::string& tgt = mapped(objects, in[word.back()].target);
      for (const auto& [o, c] : value) {
        if (o >= out.size()) throw Error(Errc::composability, what + ": output index out of range");
        if (out[o].source != src || out[o].target != tgt) {
          throw Error(Errc::composability, what + ": output " + out[o].id + " has wrong endpoints for " + word_text(in, word));
        }
        if (out[o].degree != deg) {
          throw Error(Errc::invalid_input, what + ": degree shift violated at " + word_text(in, word) + " -> " + out[o].id);
        }
      }
    }
  }
}

}  // namespace

void check_category(const Category& cat) {
  for (const Generator& g : cat.basis.basis()) {
    const bool known = std::find(cat.objects.begin(), cat.objects.end(), g.source) != cat.objects.end() &&
                       std::find(cat.objects.begin(), cat.objects.end(), g.target) != cat.objects.end();
    if (!known) throw Error(Errc::composability, "generator '" + g.id + "' uses an unknown object");
  }
  check_family(cat.m, FamilyKind::structure, cat.basis, cat.basis, nullptr, "m");
}

void check_functor(const Functor& f, const Category& src, const Category& dst) {
  for (const std::string& o : src.objects) {
    auto it = f.object_map.find(o);
    if (it == f.object_map.end() || std::find(dst.objects.begin(), dst.objects.end(), it->second) == dst.objects.end()) {
      throw Error(Errc::composability, "object map of '" + f.name + "' does not send '" + o + "' to a target object");
    }
  }
  check_family(f.f, FamilyKind::functor, src.basis, dst.basis, &f.object_map, f.name.empty() ? "f" : f.name);
}

void check_homotopy(const Homotopy& h, const Functor& f, const Category& src, const Category& dst) {
  check_family(h.h, FamilyKind::homotopy, src.basis, dst.basis, &f.object_map, h.name.empty() ? "h" : h.name);
}

Functor identity_functor(const Category& cat) {
  Functor id;
  id.name = "id";
  for (const std::string& o : cat.objects) id.object_map[o] = o;
  MultilinearMap& one = id.f.at(1);
  for (std::size_t i = 0; i < cat.basis.size(); ++i) one.add({i}, i, 1);
  return id;
}

Coeff ResidualReport::max_abs() const {
  Coeff best = 0;
  for (const auto& e : nonzero) best = std::max(best, e.value < 0 ? -e.value : e.value);
  return best;
}

}  // namespace wb::ainfty
