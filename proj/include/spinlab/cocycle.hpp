#pragma once
// 1-cocycles of {1, c} with values in a center carrying an involution θ,
// H¹, and the extension criterion gθ(g) = 1, ρ'(cγc⁻¹) = g θ(ρ'(γ)) g⁻¹.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "spinlab/clifford.hpp"
#include "spinlab/rootdata.hpp"

namespace spinlab {

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using CenterElem = TorusCoordinates;

// Finite (torsion) model of the center with its θ-action. For centers with a
// G_m factor, z θ(z) = 1 and θ(x)/x only involve μ4 × {±1}, so the torsion
// listed here carries all of Z¹ and B¹.
struct InvolutionModule {
  std::string name;
  std::vector<CenterElem> elements;
  std::function<CenterElem(const CenterElem&, const CenterElem&)> mul;
  std::function<CenterElem(const CenterElem&)> inv;
  std::function<CenterElem(const CenterElem&)> theta;
  CenterElem one;
  bool has_gm = false;

  static InvolutionModule from_center(const CenterDescriptor& d) {
    InvolutionModule m;
    m.name = tag_name(d.tag) + std::to_string(2 * d.n);
    m.elements = d.torsion;
    m.mul = [d](const CenterElem& a, const CenterElem& b) { return d.mul(a, b); };
    m.inv = [d](const CenterElem& a) { return d.inv(a); };
    m.theta = [d](const CenterElem& a) { return d.theta(a); };
    m.one = d.one();
    m.has_gm = d.has_gm;
    m.validate();
    return m;
  }
  static InvolutionModule trivial() {
    InvolutionModule m;
    m.name = "1";
    m.elements = {{1}};
    m.mul = [](const CenterElem& a, const CenterElem&) { return a; };
    m.inv = [](const CenterElem& a) { return a; };
    m.theta = [](const CenterElem& a) { return a; };
    m.one = {1};
    return m;
  }

  bool contains(const CenterElem& z) const {
    return std::find(elements.begin(), elements.end(), z) != elements.end();
  }

  void validate() const {
    for (auto& z : elements) {
      if (theta(theta(z)) != z) throw DomainError("module action is not an involution");
      for (auto& w : elements)
        if (theta(mul(z, w)) != mul(theta(z), theta(w))) throw DomainError("θ is not a homomorphism");
    }
  }
};

struct H1Result {
  std::vector<CenterElem> z1, b1;
  std::vector<CenterElem> h1_reps;  // one per class, identity class first
  std::string structure;
};

inline bool is_cocycle(const InvolutionModule& m, const CenterElem& z) {
  return m.mul(z, m.theta(z)) == m.one;
}

inline H1Result z1_b1_h1(const InvolutionModule& m) {
  m.validate();
  H1Result r;
  for (auto& z : m.elements)
    if (is_cocycle(m, z)) r.z1.push_back(z);
  for (auto& x : m.elements) {
    CenterElem b = m.mul(m.theta(x), m.inv(x));
    if (std::find(r.b1.begin(), r.b1.end(), b) == r.b1.end()) r.b1.push_back(b);
  }
  std::vector<bool> used(r.z1.size(), false);
  // identity class first, then classes in the order of Z¹
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < r.z1.size(); ++k)
    if (r.z1[k] == m.one) order.insert(order.begin(), k);
    else order.push_back(k);
  for (std::size_t k : order) {
    if (used[k]) continue;
    r.h1_reps.push_back(r.z1[k]);
    for (auto& b : r.b1) {
      CenterElem w = m.mul(r.z1[k], b);
      for (std::size_t j = 0; j < r.z1.size(); ++j)
        if (r.z1[j] == w) used[j] = true;
    }
  }
  std::size_t h = r.h1_reps.size();
  if (h == 1) {
    r.structure = "1";
  } else {
    // cyclic iff some representative has order |H¹| modulo B¹
    bool cyclic = false;
    for (auto& z : r.h1_reps) {
      CenterElem p = z;
      std::size_t k = 1;
      auto in_b1 = [&](const CenterElem& x) { return std::find(r.b1.begin(), r.b1.end(), x) != r.b1.end(); };
      while (!in_b1(p) && k <= h) {
        p = m.mul(p, z);
        ++k;
      }
      if (k == h) cyclic = true;
    }
    r.structure = cyclic ? "Z/" + std::to_string(h) : "order " + std::to_string(h);
  }
  return r;
}

// Group models for the extension criterion.
struct CliffordGroupModel {
  using Elem = GPinElement;
  int n;
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return a.inverse(); }
  Elem theta(const Elem& a) const { return spinlab::theta(a); }
  bool is_one(const Elem& a) const { return a.value() == CliffordElement::one(a.space()); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  // (s_0, s_1) ∈ Z(GSpin)
  Elem lift(const CenterElem& z) const {
    return center_element(n, z[0], z.size() > 1 ? z[1] : GaussRat(1)).g;
  }
};

struct SOMatrixModel {
  using Elem = Mat;
  int n;
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return inverse(a); }
  Elem theta(const Elem& a) const { return theta_circ(a); }
  bool is_one(const Elem& a) const { return a.is_identity(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem lift(const CenterElem& z) const { return z[0] * Mat::identity(2 * n); }
};

// pairs (ρ'(γ), ρ'(cγc⁻¹)) over generators γ
template <class Model>
using GeneratorTable = std::vector<std::pair<typename Model::Elem, typename Model::Elem>>;

template <class Model>
bool check_extension_criterion(const Model& M, const GeneratorTable<Model>& rho_gens,
                               const typename Model::Elem& g) {
  if (!M.is_one(M.mul(g, M.theta(g)))) return false;
  auto gi = M.inv(g);
  for (auto& [first, second] : rho_gens)
    if (!M.eq(second, M.mul(M.mul(g, M.theta(first)), gi))) return false;
  return true;
}

template <class Model>
std::vector<typename Model::Elem> extension_classes(const Model& M, const GeneratorTable<Model>& rho_gens,
                                                    const typename Model::Elem& g0,
                                                    const H1Result& h1) {
  if (!check_extension_criterion(M, rho_gens, g0))
    throw PreconditionError("extension_classes: g0 does not satisfy the criterion");
  std::vector<typename Model::Elem> out;
  for (auto& z : h1.h1_reps) {
    auto g = M.mul(g0, M.lift(z));
    if (!check_extension_criterion(M, rho_gens, g))
      throw DomainError("extension_classes: twisted candidate fails the criterion");
    out.push_back(g);
  }
  return out;
}

}  // namespace spinlab
