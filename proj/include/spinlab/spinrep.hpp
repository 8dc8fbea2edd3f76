#pragma once
// The Fock module ∧W of C(V_2n) (and of C(V_2n-1)), spin and half-spin
// matrices in the signed basis b_U = (−1)^{#U} e_U, the map ψ, the
// ϑ-intertwiner and the invariant pairing.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "spinlab/clifford.hpp"

namespace spinlab {

enum class Eps { Plus, Minus };

inline Eps eps_from_sign(int s) { return s > 0 ? Eps::Plus : Eps::Minus; }
inline int eps_sign(Eps e) { return e == Eps::Plus ? 1 : -1; }
inline Eps eps_neg(Eps e) { return e == Eps::Plus ? Eps::Minus : Eps::Plus; }
inline std::string eps_str(Eps e) { return e == Eps::Plus ? "+" : "-"; }
// spin^+ lives on even |U|, spin^- on odd |U|
inline int eps_parity(Eps e) { return e == Eps::Plus ? 0 : 1; }

using Subset = std::uint32_t;  // bit i-1 <-> i ∈ U

inline std::vector<int> subset_elements(Subset u) {
  std::vector<int> v;
  for (int i = 0; u >> i; ++i)
    if (u >> i & 1u) v.push_back(i + 1);
  return v;
}

// Even subsets in colex order, then odd subsets with odd[k] = even[k] Δ {n}.
struct FockBasis {
  int n = 0;
  std::vector<Subset> even, odd;

  explicit FockBasis(int n_) : n(n_) {
    for (Subset u = 0; u < (1u << n); ++u)
      if (std::popcount(u) % 2 == 0) even.push_back(u);
    for (Subset u : even) odd.push_back(u ^ (1u << (n - 1)));
  }
  std::vector<Subset> full() const {
    std::vector<Subset> f = even;
    f.insert(f.end(), odd.begin(), odd.end());
    return f;
  }
  const std::vector<Subset>& half(Eps e) const { return e == Eps::Plus ? even : odd; }
  static int sign(Subset u) { return std::popcount(u) % 2 ? -1 : 1; }
  std::size_t half_dim() const { return even.size(); }
};

namespace detail {

// generator g (0-based) of C(V) on e_U; returns false if the result is zero
inline bool fock_generator(const QuadSpace& V, int g, Subset& u, long& sign) {
  int n = V.n();
  if (V.kind() == SpaceKind::Even) {
    if (g < n) {
      if (u >> g & 1u) return false;
      if (std::popcount(u & ((1u << g) - 1)) & 1) sign = -sign;
      u |= 1u << g;
      return true;
    }
    int j = g - n;
    if (!(u >> j & 1u)) return false;
    if (std::popcount(u & ((1u << j) - 1)) & 1) sign = -sign;
    u &= ~(1u << j);
    return true;
  }
  if (V.kind() == SpaceKind::Odd) {
    int w = n - 1;
    if (g < w) {
      if (u >> g & 1u) return false;
      if (std::popcount(u & ((1u << g) - 1)) & 1) sign = -sign;
      u |= 1u << g;
      return true;
    }
    if (g < 2 * w) {
      int j = g - w;
      if (!(u >> j & 1u)) return false;
      if (std::popcount(u & ((1u << j) - 1)) & 1) sign = -sign;
      u &= ~(1u << j);
      return true;
    }
    if (std::popcount(u) & 1) sign = -sign;
    return true;
  }
  throw SpaceMismatch("no Fock module for this quadratic space");
}

inline int fock_rank(const QuadSpace& V) {
  if (V.kind() == SpaceKind::Even) return V.n();
  if (V.kind() == SpaceKind::Odd) return V.n() - 1;
  throw SpaceMismatch("no Fock module for this quadratic space");
}

}  // namespace detail

// Action of c on a vector of coefficients in the unsigned basis e_U,
// indexed by the mask U.
inline std::vector<GaussRat> act(const CliffordElement& c, const std::vector<GaussRat>& v) {
  const QuadSpace& V = c.space();
  int r = detail::fock_rank(V);
  if (v.size() != (std::size_t{1} << r)) throw DimensionError("Fock vector length");
  std::vector<GaussRat> out(v.size());
  for (auto& [m, coef] : c.terms())
    for (Subset u0 = 0; u0 < v.size(); ++u0) {
      if (v[u0].is_zero()) continue;
      Subset u = u0;
      long sign = 1;
      bool alive = true;
      for (int g = V.dim() - 1; g >= 0 && alive; --g)
        if (m >> g & 1u) alive = detail::fock_generator(V, g, u, sign);
      if (!alive) continue;
      GaussRat t = coef * v[u0];
      if (sign < 0)
        out[u] -= t;
      else
        out[u] += t;
    }
  return out;
}

// Matrix of c on ∧W in the unsigned basis, rows/cols indexed by mask.
inline Mat fock_matrix_unsigned(const CliffordElement& c) {
  const QuadSpace& V = c.space();
  int r = detail::fock_rank(V);
  std::size_t d = std::size_t{1} << r;
  Mat M(d, d);
  for (auto& [m, coef] : c.terms())
    for (Subset u0 = 0; u0 < d; ++u0) {
      Subset u = u0;
      long sign = 1;
      bool alive = true;
      for (int g = V.dim() - 1; g >= 0 && alive; --g)
        if (m >> g & 1u) alive = detail::fock_generator(V, g, u, sign);
      if (!alive) continue;
      if (sign < 0)
        M(u, u0) -= coef;
      else
        M(u, u0) += coef;
    }
  return M;
}

// Matrix in the signed basis b_U with rows and columns in the given order.
inline Mat fock_matrix(const CliffordElement& c, const std::vector<Subset>& rows,
                       const std::vector<Subset>& cols) {
  Mat U = fock_matrix_unsigned(c);
  Mat M(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) {
      const GaussRat& x = U(rows[a], cols[b]);
      if (x.is_zero()) continue;
      M(a, b) = FockBasis::sign(rows[a]) * FockBasis::sign(cols[b]) == 1 ? x : -x;
    }
  return M;
}

// Ordered basis of the odd-case module ∧W_2n-1: all subsets of {1..n-1} in colex order.
inline std::vector<Subset> odd_module_basis(int n) {
  std::vector<Subset> b;
  for (Subset u = 0; u < (1u << (n - 1)); ++u) b.push_back(u);
  return b;
}

enum class SpinKind { Plus, Minus, Full };

struct SpinMatrix {
  SpinKind kind;
  Mat mat;
};

// Full spin: 2^n matrix on ∧W_2n (even block then odd block), or the
// 2^{n-1} matrix on ∧W_2n-1 for elements of C(V_2n-1).
inline SpinMatrix spin_matrix(const GPinElement& x) {
  const QuadSpace& V = x.space();
  if (V.kind() == SpaceKind::Even) {
    auto basis = FockBasis(V.n()).full();
    return {SpinKind::Full, fock_matrix(x.value(), basis, basis)};
  }
  auto basis = odd_module_basis(V.n());
  return {SpinKind::Full, fock_matrix(x.value(), basis, basis)};
}

inline SpinMatrix half_spin_matrix(const GPinElement& x, Eps e) {
  if (x.space().kind() != SpaceKind::Even) throw SpaceMismatch("half-spin needs GSpin_2n");
  if (!x.is_even()) throw ParityError("half-spin of an odd element");
  FockBasis B(x.space().n());
  return {e == Eps::Plus ? SpinKind::Plus : SpinKind::Minus,
          fock_matrix(x.value(), B.half(e), B.half(e))};
}

// ∧W_2n-1 → ∧^+W_2n: w ↦ w (even degree), w ↦ w ∧ e_n (odd degree)
inline Mat psi_matrix(int n) {
  if (n < 2) throw DomainError("psi_matrix needs n >= 2");
  FockBasis B(n);
  auto src = odd_module_basis(n);
  Mat P(B.even.size(), src.size());
  for (std::size_t k = 0; k < src.size(); ++k) {
    Subset u = src[k];
    bool odd = std::popcount(u) & 1;
    Subset img = odd ? (u | (1u << (n - 1))) : u;
    // e_U ∧ e_n = e_{U∪n}; convert signs of b'_U and b_img
    int s = FockBasis::sign(u) * FockBasis::sign(img);
    std::size_t row = 0;
    while (B.even[row] != img) ++row;
    P(row, k) = s;
  }
  return P;
}

// Matrix of x ↦ ϑx from ∧^+ (even basis) to ∧^- (odd basis).
inline Mat theta_intertwiner(int n) {
  if (n < 2) throw DomainError("theta_intertwiner needs n >= 2");
  FockBasis B(n);
  return fock_matrix(vartheta(n).value(), B.odd, B.even);
}

// ((e_U, e_V)) = coefficient of e_1∧…∧e_n in τ(e_U) ∧ e_V
inline GaussRat pairing_unsigned(int n, Subset u, Subset v) {
  Subset full = (1u << n) - 1;
  if ((u & v) != 0 || (u | v) != full) return GaussRat();
  int r = std::popcount(u);
  long s = (r * (r - 1) / 2) % 2 ? -1 : 1;
  // sign of the shuffle putting u then v into increasing order
  int inv = 0;
  for (int a = 0; a < n; ++a)
    if (u >> a & 1u) inv += std::popcount(v & ((1u << a) - 1));
  if (inv & 1) s = -s;
  return GaussRat(s);
}

// Gram matrix in the full ordered signed basis.
inline Mat pairing_gram(int n) {
  if (n < 2) throw DomainError("pairing_gram needs n >= 2");
  auto basis = FockBasis(n).full();
  Mat J(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      GaussRat p = pairing_unsigned(n, basis[a], basis[b]);
      if (p.is_zero()) continue;
      J(a, b) = FockBasis::sign(basis[a]) * FockBasis::sign(basis[b]) == 1 ? p : -p;
    }
  return J;
}

}  // namespace spinlab
