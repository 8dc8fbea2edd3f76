#pragma once
// Root datum of GSO_2n / GSpin_2n, Weyl group, θ, μ_ε, half-spin weights,
// central characters, centers, and the torus bridge to Clifford elements.
//
// Lattices: X*(T_GSO) = ⊕ Z e_i ("e-lattice") holds roots of GSO; its dual
// ⊕ Z e_i* ("e*-lattice") = X*(T_GSpin) holds coroots of GSO, μ_ε and the
// half-spin weights. A point s = (s_0,…,s_n) of T_GSpin evaluates e_i* to s_i.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "spinlab/clifford.hpp"
#include "spinlab/spinrep.hpp"

namespace spinlab {

using WeightVector = std::vector<long>;
using TorusCoordinates = std::vector<GaussRat>;

inline long pair_weights(const WeightVector& a, const WeightVector& b) {
  if (a.size() != b.size()) throw DimensionError("weight length mismatch");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0L);
}

namespace detail {
inline WeightVector unit(int n, int i) {
  WeightVector v(n + 1, 0);
  v[i] = 1;
  return v;
}
inline WeightVector lin(const WeightVector& a, long x, const WeightVector& b, long y) {
  WeightVector r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = x * a[k] + y * b[k];
  return r;
}
}  // namespace detail

// α_i = e_i − e_{i+1} (i < n), α_n = e_{n-1} + e_n − e_0
inline std::vector<WeightVector> simple_roots(int n) {
  std::vector<WeightVector> r;
  for (int i = 1; i < n; ++i) r.push_back(detail::lin(detail::unit(n, i), 1, detail::unit(n, i + 1), -1));
  WeightVector a = detail::lin(detail::unit(n, n - 1), 1, detail::unit(n, n), 1);
  a[0] = -1;
  r.push_back(a);
  return r;
}

inline std::vector<WeightVector> simple_coroots(int n) {
  std::vector<WeightVector> r;
  for (int i = 1; i < n; ++i) r.push_back(detail::lin(detail::unit(n, i), 1, detail::unit(n, i + 1), -1));
  r.push_back(detail::lin(detail::unit(n, n - 1), 1, detail::unit(n, n), 1));
  return r;
}

// ±(e_i − e_j), ±(e_i + e_j − e_0)
inline std::vector<WeightVector> roots(int n) {
  std::vector<WeightVector> r;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      WeightVector d = detail::lin(detail::unit(n, i), 1, detail::unit(n, j), -1);
      WeightVector s = detail::lin(detail::unit(n, i), 1, detail::unit(n, j), 1);
      s[0] = -1;
      for (auto& v : {d, s}) {
        r.push_back(v);
        r.push_back(detail::lin(v, -1, v, 0));
      }
    }
  std::sort(r.begin(), r.end());
  return r;
}

// coroot of ±(e_i − e_j) is ±(e_i* − e_j*); of ±(e_i + e_j − e_0) is ±(e_i* + e_j*)
inline WeightVector coroot_of(const WeightVector& root) {
  WeightVector c = root;
  c[0] = 0;
  return c;
}

inline std::vector<WeightVector> coroots(int n) {
  std::vector<WeightVector> c;
  for (auto& r : roots(n)) c.push_back(coroot_of(r));
  std::sort(c.begin(), c.end());
  return c;
}

// GSpin is dual to GSO: its simple roots are the simple coroots above.
inline std::vector<WeightVector> gspin_simple_roots(int n) { return simple_coroots(n); }

class WeylElement {
 public:
  // perm[i-1] = σ(i); signs[i-1] = −1 marks a flip at i
  WeylElement(std::vector<int> perm, std::vector<int> signs)
      : perm_(std::move(perm)), signs_(std::move(signs)) {
    const std::size_t n = perm_.size();
    if (signs_.size() != n) throw DomainError("Weyl element: length mismatch");
    std::vector<int> p = perm_;
    std::sort(p.begin(), p.end());
    for (std::size_t i = 0; i < n; ++i)
      if (p[i] != static_cast<int>(i + 1)) throw DomainError("Weyl element: not a permutation");
    int flips = 0;
    for (int s : signs_) {
      if (s != 1 && s != -1) throw DomainError("Weyl element: signs must be ±1");
      flips += s < 0;
    }
    if (flips % 2) throw DomainError("Weyl element: odd number of sign changes");
  }
  static WeylElement identity(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    return WeylElement(p, std::vector<int>(n, 1));
  }
  static std::vector<WeylElement> all(int n) {
    std::vector<WeylElement> out;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) % 2) continue;
        std::vector<int> s(n);
        for (int i = 0; i < n; ++i) s[i] = mask >> i & 1u ? -1 : 1;
        out.emplace_back(p, s);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  int n() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  // (w1 ∘ w2)·x = w1·(w2·x)
  friend WeylElement operator*(const WeylElement& w1, const WeylElement& w2) {
    int n = w1.n();
    std::vector<int> perm(n), signs(n);
    for (int i = 0; i < n; ++i) perm[i] = w2.perm_[w1.perm_[i] - 1];
    for (int i = 0; i < n; ++i) signs[i] = w1.signs_[i] * w2.signs_[w1.perm_[i] - 1];
    return WeylElement(perm, signs);
  }
  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.perm_ == b.perm_ && a.signs_ == b.signs_;
  }

 private:
  std::vector<int> perm_, signs_;
};

// On T_GSpin points: permute s_1..s_n, then a flip at i sends s_0 ↦ s_0 s_i, s_i ↦ s_i^{-1}.
inline TorusCoordinates weyl_act(const WeylElement& w, const TorusCoordinates& s) {
  int n = w.n();
  if (static_cast<int>(s.size()) != n + 1) throw DimensionError("torus coordinates length");
  TorusCoordinates t(n + 1);
  t[0] = s[0];
  for (int i = 1; i <= n; ++i) t[i] = s[w.perm()[i - 1]];
  for (int i = 1; i <= n; ++i)
    if (w.signs()[i - 1] < 0) {
      t[0] *= t[i];
      t[i] = t[i].inv();
    }
  return t;
}

// On T_GSO points (t_0,…,t_n): permute, then a flip at i sends t_i ↦ t_0 t_i^{-1}.
inline TorusCoordinates weyl_act_gso(const WeylElement& w, const TorusCoordinates& t) {
  int n = w.n();
  if (static_cast<int>(t.size()) != n + 1) throw DimensionError("torus coordinates length");
  TorusCoordinates r(n + 1);
  r[0] = t[0];
  for (int i = 1; i <= n; ++i) r[i] = t[w.perm()[i - 1]];
  for (int i = 1; i <= n; ++i)
    if (w.signs()[i - 1] < 0) r[i] = t[0] / r[i];
  return r;
}

// On the e-lattice: a flip at i sends e_i ↦ e_0 − e_i.
inline WeightVector weyl_act_e(const WeylElement& w, const WeightVector& v) {
  int n = w.n();
  WeightVector r(n + 1);
  r[0] = v[0];
  for (int i = 1; i <= n; ++i) r[i] = v[w.perm()[i - 1]];
  for (int i = 1; i <= n; ++i)
    if (w.signs()[i - 1] < 0) {
      r[0] += r[i];
      r[i] = -r[i];
    }
  return r;
}

// On the e*-lattice: a flip at i sends e_i* ↦ −e_i*, e_0* ↦ e_0* + e_i*.
inline WeightVector weyl_act_estar(const WeylElement& w, const WeightVector& v) {
  int n = w.n();
  WeightVector r(n + 1);
  r[0] = v[0];
  for (int i = 1; i <= n; ++i) r[i] = v[w.perm()[i - 1]];
  for (int i = 1; i <= n; ++i)
    if (w.signs()[i - 1] < 0) r[i] = r[0] - r[i];
  return r;
}

// (s_0,…,s_n) ↦ (s_0 s_n, s_1,…,s_{n−1}, s_n^{-1})
inline TorusCoordinates theta_on_coords(const TorusCoordinates& s) {
  TorusCoordinates t = s;
  t[0] = s[0] * s.back();
  t.back() = s.back().inv();
  return t;
}

// e*-lattice: e_n* ↦ −e_n*, e_0* ↦ e_0* + e_n*
inline WeightVector theta_on_weights(const WeightVector& v) {
  WeightVector r = v;
  r.back() = v[0] - v.back();
  return r;
}

// e-lattice (θ°): e_n ↦ e_0 − e_n
inline WeightVector theta_on_e(const WeightVector& v) {
  WeightVector r = v;
  r[0] = v[0] + v.back();
  r.back() = -v.back();
  return r;
}

inline bool is_dominant(const WeightVector& lambda) {
  int n = static_cast<int>(lambda.size()) - 1;
  for (auto& a : simple_roots(n))
    if (pair_weights(a, lambda) < 0) return false;
  return true;
}

// (1,…,1,1) if ε = (−1)^n, else (1,…,1,0)
inline WeightVector mu_eps(int n, Eps e) {
  WeightVector m(n + 1, 1);
  int pm = n % 2 ? -1 : 1;
  if (eps_sign(e) != pm) m[n] = 0;
  return m;
}

// e_0* + Σ_{i∈U} e_i*, |U| even for ε = +, odd for ε = −
inline std::vector<WeightVector> spin_weights(int n, Eps e) {
  std::vector<WeightVector> w;
  for (Subset u = 0; u < (1u << n); ++u) {
    if (std::popcount(u) % 2 != eps_parity(e)) continue;
    WeightVector v(n + 1, 0);
    v[0] = 1;
    for (int i = 0; i < n; ++i) v[i + 1] = u >> i & 1u;
    w.push_back(v);
  }
  std::sort(w.begin(), w.end());
  return w;
}

inline GaussRat eval_weight(const WeightVector& w, const TorusCoordinates& s) {
  GaussRat r(1);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i]) r *= s[i].pow(w[i]);
  return r;
}

inline std::vector<WeightVector> dominant_members(const std::vector<WeightVector>& ws) {
  std::vector<WeightVector> d;
  for (auto& w : ws)
    if (is_dominant(w)) d.push_back(w);
  return d;
}

// value of s_0 s_1 ⋯ s_n-type central character of spin^ε at the central (a, b)
inline GaussRat central_char(int n, Eps e, const GaussRat& a, const GaussRat& b) {
  if (b != GaussRat(1) && b != GaussRat(-1)) throw DomainError("central_char: b must be ±1");
  int pm = n % 2 ? -1 : 1;
  return a * b.pow(eps_sign(e) == pm ? n : n - 1);
}

// z_ε = (ε, −1) in center coordinates (s_0, s_1)
inline std::pair<GaussRat, GaussRat> z_eps(Eps e) { return {GaussRat(eps_sign(e)), GaussRat(-1)}; }

struct TorusElement {
  GPinElement g;
  TorusCoordinates s;
};

// c ∏ (a_i e_i e_{n+i} + b_i e_{n+i} e_i), with s_0 = c ∏ b_i and s_i = a_i / b_i
inline TorusElement torus_clifford_element(const GaussRat& c, const std::vector<GaussRat>& a,
                                           const std::vector<GaussRat>& b) {
  int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) throw DimensionError("torus parameters length");
  if (c.is_zero()) throw DomainError("torus: zero parameter");
  QuadSpace V = QuadSpace::even(n);
  CliffordElement x = CliffordElement::scalar(V, c);
  TorusCoordinates s(n + 1);
  s[0] = c;
  for (int i = 1; i <= n; ++i) {
    if (a[i - 1].is_zero() || b[i - 1].is_zero()) throw DomainError("torus: zero parameter");
    CliffordElement ei = CliffordElement::gen(V, i), fi = CliffordElement::gen(V, n + i);
    x = x * (a[i - 1] * (ei * fi) + b[i - 1] * (fi * ei));
    s[0] *= b[i - 1];
    s[i] = a[i - 1] / b[i - 1];
  }
  return {GPinElement(x), s};
}

inline TorusElement torus_from_coords(const TorusCoordinates& s) {
  std::vector<GaussRat> a(s.begin() + 1, s.end()), b(s.size() - 1, GaussRat(1));
  return torus_clifford_element(s[0], a, b);
}

// Reads (s_0,…,s_n) off an element of T_GSpin: s_i from pr°, s_0 from the vacuum.
inline TorusCoordinates torus_coords_of(const GPinElement& g) {
  int n = g.space().n();
  if (g.space().kind() != SpaceKind::Even) throw SpaceMismatch("torus coordinates need GSpin_2n");
  const Mat& p = g.pr_circ();
  Mat want(2 * n, 2 * n);
  TorusCoordinates s(n + 1);
  for (int i = 1; i <= n; ++i) {
    s[i] = p(i - 1, i - 1);
    if (s[i].is_zero()) throw DomainError("element is not in the diagonal torus");
    want(i - 1, i - 1) = s[i];
    want(n + i - 1, n + i - 1) = s[i].inv();
  }
  if (p != want) throw DomainError("element is not in the diagonal torus");
  std::vector<GaussRat> vac(std::size_t{1} << n);
  vac[0] = 1;
  auto img = act(g.value(), vac);
  s[0] = img[0];
  return s;
}

// Center of GSpin_2n in coordinates (s_0, s_1) ↦ (s_0, s_1, …, s_1).
inline TorusElement center_element(int n, const GaussRat& s0, const GaussRat& s1) {
  return torus_clifford_element(s0, std::vector<GaussRat>(n, s1), std::vector<GaussRat>(n, GaussRat(1)));
}

enum class GroupTag { SO, Spin, GSpin, GSO };

inline std::string tag_name(GroupTag t) {
  switch (t) {
    case GroupTag::SO: return "SO";
    case GroupTag::Spin: return "Spin";
    case GroupTag::GSpin: return "GSpin";
    default: return "GSO";
  }
}

// Elements are coordinate tuples: (s_0, s_1) for Spin/GSpin, (c) for the
// scalar matrices c·I of SO/GSO. Only the torsion inside Q(i) is listed.
struct CenterDescriptor {
  GroupTag tag;
  int n;
  bool has_gm;  // continuous G_m factor present
  std::vector<TorusCoordinates> torsion;
  std::vector<TorusCoordinates> generators;
  std::string structure;

  TorusCoordinates one() const {
    return tag == GroupTag::Spin || tag == GroupTag::GSpin ? TorusCoordinates{1, 1} : TorusCoordinates{1};
  }
  TorusCoordinates mul(const TorusCoordinates& a, const TorusCoordinates& b) const {
    TorusCoordinates r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] * b[k];
    return r;
  }
  TorusCoordinates inv(const TorusCoordinates& a) const {
    TorusCoordinates r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k].inv();
    return r;
  }
  // θ(s_0, s_1) = (s_0 s_1, s_1); trivial on scalars of SO/GSO
  TorusCoordinates theta(const TorusCoordinates& a) const {
    if (tag == GroupTag::Spin || tag == GroupTag::GSpin) return {a[0] * a[1], a[1]};
    return a;
  }
  int order(const TorusCoordinates& a) const {
    TorusCoordinates p = a;
    for (int k = 1; k <= 64; ++k) {
      if (p == one()) return k;
      p = mul(p, a);
    }
    return 0;
  }
};

inline std::vector<GaussRat> mu4() { return {GaussRat(1), GaussRat::i(), GaussRat(-1), -GaussRat::i()}; }

// order of g in GPin by repeated multiplication (0 if > bound)
inline int element_order(const GPinElement& g, int bound = 64) {
  CliffordElement one = CliffordElement::one(g.space());
  CliffordElement p = g.value();
  for (int k = 1; k <= bound; ++k) {
    if (p == one) return k;
    p = p * g.value();
  }
  return 0;
}

inline CenterDescriptor center(GroupTag tag, int n) {
  CenterDescriptor d{tag, n, false, {}, {}, ""};
  switch (tag) {
    case GroupTag::SO:
      d.torsion = {{1}, {-1}};
      d.generators = {{-1}};
      d.structure = "Z/2";
      break;
    case GroupTag::GSO:
      d.has_gm = true;
      d.torsion = {{1}, {GaussRat::i()}, {-1}, {-GaussRat::i()}};
      d.generators = {};
      d.structure = "Gm";
      break;
    case GroupTag::GSpin:
      d.has_gm = true;
      for (auto& s1 : {GaussRat(1), GaussRat(-1)})
        for (auto& s0 : mu4()) d.torsion.push_back({s0, s1});
      d.generators = {{1, -1}};
      d.structure = "Gm x Z/2";
      break;
    case GroupTag::Spin: {
      // 𝒩 = s_0^2 s_1^n = 1 cuts Z(Spin) out of Z(GSpin); all such points lie in μ4 × {±1}
      for (auto& s1 : {GaussRat(1), GaussRat(-1)})
        for (auto& s0 : mu4())
          if (s0 * s0 * s1.pow(n) == GaussRat(1)) d.torsion.push_back({s0, s1});
      std::vector<int> orders;
      for (auto& z : d.torsion) orders.push_back(element_order(center_element(n, z[0], z[1]).g));
      int maxo = *std::max_element(orders.begin(), orders.end());
      if (d.torsion.size() == 4 && maxo == 4) {
        d.structure = "Z/4";
        for (std::size_t k = 0; k < d.torsion.size(); ++k)
          if (orders[k] == 4 && d.torsion[k][0] == GaussRat::i()) d.generators = {d.torsion[k]};
      } else if (d.torsion.size() == 4 && maxo == 2) {
        d.structure = "(Z/2)^2";
        for (std::size_t k = 0; k < d.torsion.size(); ++k)
          if (orders[k] == 2 && d.generators.size() < 2 && d.torsion[k][1] == GaussRat(-1))
            d.generators.push_back(d.torsion[k]);
      } else {
        d.structure = "unexpected";
      }
      break;
    }
  }
  return d;
}

}  // namespace spinlab
