#pragma once
// Double quivers of types A and D with the preprojective relations, and
// finite-dimensional representations over the rationals.
//
// Conventions. A path written pq runs first along p, then along q. Modules
// are left modules, so an arrow p : x -> y acts as a linear map from the space
// at y to the space at x; each Arrow below records that action direction
// (from, to). The relation term pq is evaluated as mat(p) * mat(q).

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "coxeter.hpp"
#include "linalg.hpp"

namespace preproj {

struct Arrow {
  std::string name;
  Vertex from;  // source of the linear map
  Vertex to;    // target of the linear map
};

struct PathTerm {
  int coeff;
  std::vector<int> arrows;  // arrow indices in path order
};

struct Relation {
  Vertex at;
  std::vector<PathTerm> terms;
};

class DoubleQuiver {
 public:
  explicit DoubleQuiver(DynkinType t) : type_(t), vertices_(t.vertices()) {
    if (t.family == Family::A) build_A();
    else build_D();
  }

  const DynkinType& dynkin() const { return type_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<Relation>& relations() const { return relations_; }

  int vertex_pos(Vertex v) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end()) throw InputError("vertex " + std::to_string(v) + " not in " + type_.name());
    return static_cast<int>(it - vertices_.begin());
  }

  int arrow_index(const std::string& name) const {
    for (std::size_t k = 0; k < arrows_.size(); ++k)
      if (arrows_[k].name == name) return static_cast<int>(k);
    throw InputError("no arrow '" + name + "' in " + type_.name());
  }

  // Arrow acting between the given vertices, if any.
  int arrow_between(Vertex from, Vertex to) const {
    for (std::size_t k = 0; k < arrows_.size(); ++k)
      if (arrows_[k].from == from && arrows_[k].to == to) return static_cast<int>(k);
    return -1;
  }

 private:
  int add(std::string name, Vertex from, Vertex to) {
    arrows_.push_back({std::move(name), from, to});
    return static_cast<int>(arrows_.size()) - 1;
  }

  static std::string alpha(int i) { return "alpha" + std::to_string(i); }
  static std::string beta(int i) { return "beta" + std::to_string(i); }

  void build_A() {
    const int n = type_.rank;
    std::map<std::string, int> id;
    for (int i = 1; i < n; ++i) {
      id[alpha(i)] = add(alpha(i), i + 1, i);
      id[beta(i + 1)] = add(beta(i + 1), i, i + 1);
    }
    if (n < 2) return;
    relations_.push_back({1, {{1, {id[alpha(1)], id[beta(2)]}}}});
    for (int i = 2; i < n; ++i)
      relations_.push_back({i, {{1, {id[alpha(i)], id[beta(i + 1)]}}, {-1, {id[beta(i)], id[alpha(i - 1)]}}}});
    relations_.push_back({n, {{1, {id[beta(n)], id[alpha(n - 1)]}}}});
  }

  void build_D() {
    const int n = type_.rank;
    if (n < 3) return;
    std::map<std::string, int> id;
    id["alpha1+"] = add("alpha1+", 2, 1);
    id["alpha1-"] = add("alpha1-", 2, -1);
    id["beta2+"] = add("beta2+", 1, 2);
    id["beta2-"] = add("beta2-", -1, 2);
    for (int i = 2; i <= n - 2; ++i) {
      id[alpha(i)] = add(alpha(i), i + 1, i);
      id[beta(i + 1)] = add(beta(i + 1), i, i + 1);
    }
    relations_.push_back({1, {{1, {id["alpha1+"], id["beta2+"]}}}});
    relations_.push_back({-1, {{1, {id["alpha1-"], id["beta2-"]}}}});
    Relation at2{2, {}};
    if (n >= 4) at2.terms.push_back({1, {id[alpha(2)], id[beta(3)]}});
    at2.terms.push_back({-1, {id["beta2+"], id["alpha1+"]}});
    at2.terms.push_back({-1, {id["beta2-"], id["alpha1-"]}});
    relations_.push_back(at2);
    for (int i = 3; i <= n - 2; ++i)
      relations_.push_back({i, {{1, {id[alpha(i)], id[beta(i + 1)]}}, {-1, {id[beta(i)], id[alpha(i - 1)]}}}});
    if (n >= 4) relations_.push_back({n - 1, {{1, {id[beta(n - 1)], id[alpha(n - 2)]}}}});
  }

  DynkinType type_;
  std::vector<Vertex> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;
};

inline std::shared_ptr<const DoubleQuiver> quiver_of(DynkinType t) {
  return std::make_shared<const DoubleQuiver>(t);
}

class Representation {
 public:
  Representation() = default;

  // Zero maps between spaces of the given dimensions (indexed like vertices()).
  Representation(std::shared_ptr<const DoubleQuiver> q, std::vector<int> dims)
      : q_(std::move(q)), dims_(std::move(dims)) {
    if (dims_.size() != q_->vertices().size()) throw InputError("dimension vector has wrong length");
    for (int d : dims_)
      if (d < 0) throw InputError("negative dimension");
    for (const Arrow& a : q_->arrows()) mats_.emplace_back(dim(a.to), dim(a.from));
  }

  const DoubleQuiver& quiver() const { return *q_; }
  std::shared_ptr<const DoubleQuiver> quiver_ptr() const { return q_; }
  const DynkinType& dynkin() const { return q_->dynkin(); }

  const std::vector<int>& dims() const { return dims_; }
  int dim(Vertex v) const { return dims_[q_->vertex_pos(v)]; }
  int dim_at(int pos) const { return dims_[pos]; }
  int total_dim() const {
    int s = 0;
    for (int d : dims_) s += d;
    return s;
  }

  const std::vector<QMatrix>& mats() const { return mats_; }
  const QMatrix& mat(int arrow) const { return mats_[arrow]; }
  const QMatrix& mat(const std::string& name) const { return mats_[q_->arrow_index(name)]; }
  QMatrix& mat_mut(int arrow) { return mats_[arrow]; }

  void set_mat(int arrow, QMatrix m) {
    const Arrow& a = q_->arrows()[arrow];
    if (m.rows() != dim(a.to) || m.cols() != dim(a.from))
      throw InputError("matrix for " + a.name + " has shape " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + ", expected " + std::to_string(dim(a.to)) + "x" +
                       std::to_string(dim(a.from)));
    mats_[arrow] = std::move(m);
  }

  // Vertices at which a preprojective relation fails.
  std::vector<Vertex> relation_defects() const {
    std::vector<Vertex> bad;
    for (const Relation& r : q_->relations()) {
      int d = dim(r.at);
      QMatrix acc(d, d);
      for (const PathTerm& t : r.terms) {
        int first = t.arrows.front();
        QMatrix p = mats_[first];
        for (std::size_t k = 1; k < t.arrows.size(); ++k) p = p * mats_[t.arrows[k]];
        acc = acc + Rational(t.coeff) * p;
      }
      if (!acc.is_zero()) bad.push_back(r.at);
    }
    return bad;
  }

  bool satisfies_relations() const { return relation_defects().empty(); }

  void check_relations(const std::string& what) const {
    auto bad = relation_defects();
    if (!bad.empty())
      throw ConsistencyError(what + ": preprojective relation fails at vertex " + std::to_string(bad.front()));
  }

  friend bool operator==(const Representation& x, const Representation& y) {
    return x.dynkin() == y.dynkin() && x.dims_ == y.dims_ && x.mats_ == y.mats_;
  }

 private:
  std::shared_ptr<const DoubleQuiver> q_;
  std::vector<int> dims_;
  std::vector<QMatrix> mats_;
};

}  // namespace preproj
