#include "workbench/ainfty_json.hpp"
#include "workbench/error.hpp"

namespace wb::ainfty {

namespace {

Json family_json(const MapFamily& fam, const GradedHom& in, const GradedHom& out) {
  Json rows = Json::array();
  for (int a = 1; a <= fam.cap(); ++a) {
    for (const auto& [word, value] : fam.get(a)->table()) {
      Json ids = Json::array();
      for (std::size_t i : word) ids.push_back(in[i].id);
      Json vals = Json::object();
      for (const auto& [o, c] : value) vals[out[o].id] = c;
      rows.push_back({{"in", ids}, {"out", vals}});
    }
  }
  return rows;
}

MapFamily family_from_json(const Json& rows, const GradedHom& in, const GradedHom& out, const char* what) {
  if (!rows.is_array()) throw Error(Errc::invalid_input, std::string(what) + ": 'maps' must be an array");
  MapFamily fam;
  for (const Json& row : rows) {
    if (!row.is_object() || !row.contains("in") || !row.contains("out") || !row["in"].is_array() ||
        row["in"].empty() || !row["out"].is_object()) {
      throw Error(Errc::invalid_input, std::string(what) + ": table rows need a nonempty 'in' list and an 'out' object");
    }
    Word word;
    for (const Json& id : row["in"]) word.push_back(in.index(id.get<std::string>()));
    MultilinearMap& m = fam.at(static_cast<int>(word.size()));
    for (const auto& [id, c] : row["out"].items()) m.add(word, out.index(id), c.get<Coeff>());
  }
  return fam;
}

template <class F>
auto guarded(F&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw Error(Errc::invalid_input, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Json to_json(const Category& cat) {
  Json basis = Json::array();
  for (const Generator& g : cat.basis.basis()) {
    Json row = {{"id", g.id}, {"source", g.source}, {"target", g.target}, {"degree", g.degree}};
    if (g.action) row["action"] = *g.action;
    if (!g.label.empty()) row["label"] = g.label;
    basis.push_back(row);
  }
  return {{"kind", "category"},
          {"name", cat.name},
          {"objects", cat.objects},
          {"basis", basis},
          {"maps", family_json(cat.m, cat.basis, cat.basis)}};
}

Category category_from_json(const Json& j) {
  return guarded([&] {
    Category cat;
    cat.name = j.value("name", "");
    cat.objects = j.at("objects").get<std::vector<std::string>>();
    for (const Json& g : j.at("basis")) {
      Generator gen{g.at("id").get<std::string>(), g.at("source").get<std::string>(),
                    g.at("target").get<std::string>(), g.at("degree").get<int>(), std::nullopt,
                    g.value("label", "")};
      if (g.contains("action")) gen.action = g["action"].get<double>();
      cat.basis.add(std::move(gen));
    }
    cat.m = family_from_json(j.value("maps", Json::array()), cat.basis, cat.basis, "category");
    check_category(cat);
    return cat;
  });
}

Json to_json(const Functor& f, const Category& src, const Category& dst) {
  return {{"kind", "functor"},
          {"name", f.name},
          {"object_map", f.object_map},
          {"maps", family_json(f.f, src.basis, dst.basis)}};
}

Functor functor_from_json(const Json& j, const Category& src, const Category& dst) {
  return guarded([&] {
    Functor f;
    f.name = j.value("name", "");
    f.object_map = j.at("object_map").get<std::map<std::string, std::string>>();
    f.f = family_from_json(j.value("maps", Json::array()), src.basis, dst.basis, "functor");
    check_functor(f, src, dst);
    return f;
  });
}

Json to_json(const Homotopy& h, const Category& src, const Category& dst) {
  return {{"kind", "homotopy"}, {"name", h.name}, {"maps", family_json(h.h, src.basis, dst.basis)}};
}

Homotopy homotopy_from_json(const Json& j, const Category& src, const Category& dst) {
  return guarded([&] {
    Homotopy h;
    h.name = j.value("name", "");
    h.h = family_from_json(j.value("maps", Json::array()), src.basis, dst.basis, "homotopy");
    return h;
  });
}

Json to_json(const ResidualReport& rep, const GradedHom& in, const GradedHom& out) {
  Json entries = Json::array();
  for (const ResidualEntry& e : rep.nonzero) {
    Json ids = Json::array();
    for (std::size_t i : e.inputs) ids.push_back(in[i].id);
    entries.push_back({{"arity", e.arity}, {"inputs", ids}, {"output", out[e.output].id}, {"value", e.value}});
  }
  return {{"relation", rep.relation}, {"k_max", rep.k_max},     {"tuples", rep.tuples},
          {"ok", rep.ok()},           {"max_abs", rep.max_abs()}, {"nonzero", entries}};
}

}  // namespace wb::ainfty
