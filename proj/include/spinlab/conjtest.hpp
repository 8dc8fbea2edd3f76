#pragma once
// Conjugacy invariants from the fundamental set {𝒩, std, spin^+, spin^-},
// regular unipotents in SO_2n, and the weight-level checks for Spin_7 ⊂ SO_8.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spinlab/clifford.hpp"
#include "spinlab/rootdata.hpp"
#include "spinlab/spinrep.hpp"

namespace spinlab {

struct UnsupportedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Fingerprint {
  int parity = 0;
  GaussRat norm;
  Poly cp_std;
  Poly cp_spin_plus, cp_spin_minus;  // even elements
  Poly cp_spin_full;                 // odd elements

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.parity == b.parity && a.norm == b.norm && a.cp_std == b.cp_std &&
           a.cp_spin_plus == b.cp_spin_plus && a.cp_spin_minus == b.cp_spin_minus &&
           a.cp_spin_full == b.cp_spin_full;
  }
};

// std is pr: GSpin → GSO ⊂ GL_2n
inline Fingerprint fingerprint(const GPinElement& g) {
  if (g.space().kind() != SpaceKind::Even) throw SpaceMismatch("fingerprint expects GPin_2n");
  Fingerprint f;
  f.parity = g.parity();
  f.norm = g.norm();
  f.cp_std = charpoly(g.pr());
  if (g.is_even()) {
    f.cp_spin_plus = charpoly(half_spin_matrix(g, Eps::Plus).mat);
    f.cp_spin_minus = charpoly(half_spin_matrix(g, Eps::Minus).mat);
  } else {
    f.cp_spin_full = charpoly(spin_matrix(g).mat);
  }
  return f;
}

inline bool is_conjugate_gspin(const GPinElement& g, const GPinElement& h) {
  if (!g.is_even() || !h.is_even()) throw ParityError("is_conjugate_gspin expects GSpin elements");
  return fingerprint(g) == fingerprint(h);
}

inline bool is_conjugate_gpin(const GPinElement& g, const GPinElement& h) {
  if (g.parity() != h.parity()) return false;
  if (g.norm() != h.norm()) return false;
  if (charpoly(g.pr()) != charpoly(h.pr())) return false;
  return charpoly(spin_matrix(g).mat) == charpoly(spin_matrix(h).mat);
}

inline bool is_outer_conjugate(const GPinElement& g, const GPinElement& h) {
  return is_conjugate_gspin(g, theta(h));
}

inline bool preserves_form(const Mat& u, const Mat& gram) { return u.transpose() * gram * u == gram; }

inline bool is_regular_unipotent_so(const Mat& u) {
  if (!u.square() || u.rows() % 2) throw DimensionError("expected a 2n x 2n matrix");
  int n = static_cast<int>(u.rows()) / 2;
  if (!preserves_form(u, QuadSpace::even(n).gram_matrix()))
    throw DomainError("matrix does not preserve the quadratic form");
  if (det(u) != GaussRat(1)) throw DomainError("matrix is not in SO");
  auto part = jordan_partition(u);  // throws on non-unipotent input
  return part == std::vector<int>{2 * n - 1, 1};
}

// X_{v,w}(x) = <w,x> v − <v,x> w, an element of so(V)
inline Mat so_element(const QuadSpace& V, const std::vector<GaussRat>& v, const std::vector<GaussRat>& w) {
  Mat B = V.gram_matrix();
  int m = V.dim();
  Mat X(m, m);
  auto Bv = B.apply(v), Bw = B.apply(w);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) X(r, c) = v[r] * Bw[c] - w[r] * Bv[c];
  return X;
}

// Sum of simple root vectors of so_2n−1, pushed into so_2n through φ.
inline Mat principal_nilpotent(int n) {
  if (n < 3) throw DomainError("principal_nilpotent needs n >= 3");
  QuadSpace V = QuadSpace::even(n);
  auto e = [&](int j) {
    std::vector<GaussRat> v(2 * n);
    v[j - 1] = 1;
    return v;
  };
  Mat E(2 * n, 2 * n);
  for (int i = 1; i <= n - 2; ++i) E = E + so_element(V, e(i), e(n + i + 1));
  auto last = e(n);
  last[2 * n - 1] = 1;
  E = E + so_element(V, e(n - 1), last);
  return E;
}

// exp of the root vector X_{e_1, e_{n+2}}, a long-root unipotent
inline Mat root_unipotent(int n) {
  QuadSpace V = QuadSpace::even(n);
  std::vector<GaussRat> a(2 * n), b(2 * n);
  a[0] = 1;
  b[n + 1] = 1;
  return exp_nilpotent(so_element(V, a, b));
}

// Canonical W(D4)-orbit test for the two images b and θ°b in T_SO8.
inline std::vector<long> spin7_image(long a1, long a2, long a3) {
  if ((a1 + a2 + a3) % 2 != 0) throw DomainError("spin7: a1 + a2 + a3 must be even");
  return {(a1 + a2 + a3) / 2, (a1 + a2 - a3) / 2, (a1 - a2 + a3) / 2, (a1 - a2 - a3) / 2};
}

inline std::vector<std::vector<long>> weyl_orbit_so(const std::vector<long>& b) {
  int n = static_cast<int>(b.size());
  std::set<std::vector<long>> orbit;
  for (auto& w : WeylElement::all(n)) {
    std::vector<long> r(n);
    for (int i = 0; i < n; ++i) r[i] = w.signs()[i] * b[w.perm()[i] - 1];
    orbit.insert(r);
  }
  return {orbit.begin(), orbit.end()};
}

// true iff spin°(a) and θ°spin°(a) lie in the same SO_8 Weyl orbit
inline bool spin7_orbit_discriminator(long a1, long a2, long a3) {
  auto b = spin7_image(a1, a2, a3);
  auto tb = b;
  tb[3] = -tb[3];
  auto orbit = weyl_orbit_so(b);
  return std::binary_search(orbit.begin(), orbit.end(), tb);
}

struct IrreducibilityCheck {
  bool matches_std_plus_one = false;
  bool matches_spin_circ = false;
  std::string label() const {
    if (matches_std_plus_one && matches_spin_circ) return "both";
    if (matches_std_plus_one) return "std+1";
    if (matches_spin_circ) return "spin";
    return "neither";
  }
};

// Weight multisets in doubled units: spin^ε∘spin° on T_Spin7 against
// std⊕1 = {±a_i, 0, 0} and spin° = {(±a1±a2±a3)/2}.
inline IrreducibilityCheck spin_minus_irreducibility_weight_check(int n, Eps e, long a1, long a2,
                                                                  long a3) {
  if (n != 4) throw UnsupportedError("irreducibility check is only defined for n = 4");
  auto b = spin7_image(a1, a2, a3);
  std::vector<long> restricted;
  for (unsigned mask = 0; mask < 16; ++mask) {
    int minus = std::popcount(mask);
    if ((minus % 2 == 0) != (e == Eps::Plus)) continue;
    long s = 0;
    for (int j = 0; j < 4; ++j) s += (mask >> j & 1u ? -1 : 1) * b[j];
    restricted.push_back(s);
  }
  std::vector<long> stdp1{2 * a1, -2 * a1, 2 * a2, -2 * a2, 2 * a3, -2 * a3, 0, 0};
  std::vector<long> spinc;
  for (int s2 : {1, -1})
    for (int s3 : {1, -1})
      for (int s1 : {1, -1}) spinc.push_back(s1 * a1 + s2 * a2 + s3 * a3);
  std::sort(restricted.begin(), restricted.end());
  std::sort(stdp1.begin(), stdp1.end());
  std::sort(spinc.begin(), spinc.end());
  return {restricted == stdp1, restricted == spinc};
}

}  // namespace spinlab
