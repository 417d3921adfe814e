#pragma once
// JSON serialization of elements, representations, brick diagrams and
// semibricks, with parsers that invert each printer.

#include <json.hpp>

#include <string>
#include <vector>

#include "semibricks.hpp"

namespace preproj {

using Json = nlohmann::ordered_json;

inline std::string family_name(Family f) { return f == Family::A ? "A" : "D"; }

inline DynkinType type_from_json(const Json& j) {
  try {
    return DynkinType::make(parse_family(j.at("type").get<std::string>()), j.at("rank").get<int>());
  } catch (const Json::exception& e) {
    throw InputError(std::string("bad type fields: ") + e.what());
  }
}

template <class F>
auto json_guard(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

inline Json to_json(const CoxeterElement& w) {
  const DynkinType& t = w.dynkin();
  return Json{{"type", family_name(t.family)}, {"rank", t.rank}, {"window", w.window()}};
}

inline CoxeterElement element_from_json(const Json& j) {
  return json_guard("element", [&] { return CoxeterElement(type_from_json(j), j.at("window").get<std::vector<int>>()); });
}

inline Json to_json(const Representation& M) {
  const auto& q = M.quiver();
  Json dims = Json::object(), mats = Json::object();
  for (std::size_t p = 0; p < q.vertices().size(); ++p) dims[std::to_string(q.vertices()[p])] = M.dims()[p];
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const QMatrix& m = M.mat(static_cast<int>(k));
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m(i, c)));
      rows.push_back(row);
    }
    mats[q.arrows()[k].name] = rows;
  }
  const DynkinType& t = M.dynkin();
  return Json{{"type", family_name(t.family)}, {"rank", t.rank}, {"dims", dims}, {"mats", mats}};
}

inline Representation representation_from_json(const Json& j) {
  return json_guard("representation", [&] {
    auto q = quiver_of(type_from_json(j));
    std::vector<int> dims;
    for (Vertex v : q->vertices()) dims.push_back(j.at("dims").at(std::to_string(v)).get<int>());
    Representation M(q, dims);
    for (const auto& [name, rows] : j.at("mats").items()) {
      int k = q->arrow_index(name);
      const Arrow& a = q->arrows()[k];
      QMatrix m(M.dim(a.to), M.dim(a.from));
      if (static_cast<int>(rows.size()) != m.rows()) throw InputError("matrix for " + name + " has wrong row count");
      for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols())
          throw InputError("matrix for " + name + " has wrong column count");
        for (int c = 0; c < m.cols(); ++c) m(i, c) = rational_from_string(rows[i][c].get<std::string>());
      }
      M.set_mat(k, std::move(m));
    }
    return M;
  });
}

inline Json to_json(const BrickDiagram& g) {
  const DynkinType& t = g.dynkin;
  Json params{{"a", g.params.a}, {"b", g.params.b}};
  if (t.family == Family::D) {
    params["r"] = g.params.r;
    params["c"] = g.params.c;
  } else {
    params["r"] = nullptr;
    params["c"] = nullptr;
  }
  params["R"] = std::vector<int>(g.params.R.begin(), g.params.R.end());
  Json arrows = Json::array();
  for (auto [x, y] : g.arrows) arrows.push_back({x, y});
  Json dims = Json::object();
  auto vs = t.vertices();
  auto dv = g.dim_vector();
  for (std::size_t p = 0; p < vs.size(); ++p) dims[std::to_string(vs[p])] = dv[p];
  Json j{{"type", family_name(t.family)}, {"rank", t.rank}};
  j["window"] = g.window ? Json(*g.window) : Json(nullptr);
  j["type_l"] = g.type_l ? Json(*g.type_l) : Json(nullptr);
  j["params"] = params;
  j["symbols"] = g.symbols();
  j["v_minus"] = g.v_minus;
  j["arrows"] = arrows;
  j["dim_vector"] = dims;
  return j;
}

inline BrickDiagram diagram_from_json(const Json& j) {
  return json_guard("diagram", [&] {
    BrickDiagram g;
    g.dynkin = type_from_json(j);
    if (!j.at("window").is_null()) g.window = j.at("window").get<std::vector<int>>();
    if (!j.at("type_l").is_null()) g.type_l = j.at("type_l").get<int>();
    const Json& p = j.at("params");
    g.params.a = p.at("a").get<int>();
    g.params.b = p.at("b").get<int>();
    if (!p.at("r").is_null()) g.params.r = p.at("r").get<int>();
    if (!p.at("c").is_null()) g.params.c = p.at("c").get<int>();
    for (int v : p.at("R").get<std::vector<int>>()) g.params.R.insert(v);
    g.v_minus = j.at("v_minus").get<std::vector<int>>();
    for (int s : j.at("symbols").get<std::vector<int>>())
      if (std::find(g.v_minus.begin(), g.v_minus.end(), s) == g.v_minus.end()) g.v_plus.push_back(s);
    for (const auto& a : j.at("arrows")) g.arrows.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
    std::sort(g.arrows.begin(), g.arrows.end());
    return g;
  });
}

inline Json to_json(const Semibrick& s) {
  Json sums = Json::array();
  for (const auto& x : s.summands) {
    Json b = to_json(x.diagram);
    b["descent"] = x.d;
    b["representation"] = to_json(x.rep);
    sums.push_back(b);
  }
  Json j = to_json(s.w);
  j["summands"] = sums;
  return j;
}

inline Semibrick semibrick_from_json(const Json& j) {
  return json_guard("semibrick", [&] {
    Semibrick s{element_from_json(j), {}};
    for (const auto& b : j.at("summands"))
      s.summands.push_back({b.at("descent").get<int>(), diagram_from_json(b), representation_from_json(b.at("representation"))});
    return s;
  });
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace preproj
