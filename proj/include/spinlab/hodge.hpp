#pragma once
// Hodge–Tate weight multisets for spin^ε and the regularity predicates.

#include <algorithm>
#include <cstdlib>
#include <set>
#include <vector>

#include "spinlab/rootdata.hpp"

namespace spinlab {

// λ = (a_0, a_1, …, a_n) with a_1 ≥ … ≥ a_{n−1} ≥ |a_n| ≥ 0
struct HighestWeight {
  WeightVector a;

  explicit HighestWeight(WeightVector v) : a(std::move(v)) {
    int n = static_cast<int>(a.size()) - 1;
    if (n < 2) throw DomainError("highest weight needs n >= 2");
    for (int i = 1; i < n - 1; ++i)
      if (a[i] < a[i + 1]) throw DomainError("highest weight is not dominant");
    if (a[n - 1] < std::labs(a[n])) throw DomainError("highest weight is not dominant");
  }
  int n() const { return static_cast<int>(a.size()) - 1; }
};

struct HTMultiset {
  std::vector<long> values;  // sorted, with repetition
  long multiplicity = 1;
  friend bool operator==(const HTMultiset& x, const HTMultiset& y) {
    return x.values == y.values && x.multiplicity == y.multiplicity;
  }
};

// subsets whose size has the parity of n when ε = (−1)^n, the other parity otherwise
inline std::vector<Subset> p_eps(int n, Eps e) {
  int pm = n % 2 ? -1 : 1;
  int parity = eps_sign(e) == pm ? n % 2 : 1 - n % 2;
  std::vector<Subset> out;
  for (Subset u = 0; u < (1u << n); ++u)
    if (std::popcount(u) % 2 == parity) out.push_back(u);
  return out;
}

// (a_0 − n(n−1)/2, a_1 + n − 1, …, a_{n−1} + 1, a_n)
inline WeightVector b_shift(const HighestWeight& lam) {
  int n = lam.n();
  WeightVector b = lam.a;
  b[0] -= n * (n - 1) / 2;
  for (int i = 1; i <= n; ++i) b[i] += n - i;
  return b;
}

inline HTMultiset ht_multiset(int n, Eps e, const HighestWeight& lam, long mult) {
  if (lam.n() != n) throw DimensionError("highest weight has the wrong length");
  if (mult < 1) throw DomainError("multiplicity must be positive");
  HTMultiset h;
  h.multiplicity = mult;
  for (Subset I : p_eps(n, e)) {
    long v = -lam.a[0];
    for (int i = 1; i <= n; ++i) v += (I >> (i - 1) & 1u) ? -lam.a[i] : (n - i);
    for (long k = 0; k < mult; ++k) h.values.push_back(v);
  }
  std::sort(h.values.begin(), h.values.end());
  return h;
}

// −⟨w, b⟩ over the weights w of spin^ε
inline HTMultiset ht_via_spin_weights(int n, Eps e, const HighestWeight& lam, long mult) {
  if (lam.n() != n) throw DimensionError("highest weight has the wrong length");
  if (mult < 1) throw DomainError("multiplicity must be positive");
  WeightVector b = b_shift(lam);
  HTMultiset h;
  h.multiplicity = mult;
  for (auto& w : spin_weights(n, e))
    for (long k = 0; k < mult; ++k) h.values.push_back(-pair_weights(w, b));
  std::sort(h.values.begin(), h.values.end());
  return h;
}

// {±b_i} pairwise distinct
inline bool is_std_regular(const HighestWeight& lam) {
  WeightVector b = b_shift(lam);
  std::set<long> seen;
  for (int i = 1; i <= lam.n(); ++i) {
    if (!seen.insert(b[i]).second) return false;
    if (!seen.insert(-b[i]).second) return false;
  }
  return true;
}

// for each ε, {b_0 + Σ_{i∈U} b_i : U ∈ 𝒫^ε(n)} pairwise distinct
inline bool is_spin_regular(const HighestWeight& lam) {
  WeightVector b = b_shift(lam);
  for (Eps e : {Eps::Plus, Eps::Minus}) {
    std::set<long> seen;
    for (Subset U : p_eps(lam.n(), e)) {
      long v = b[0];
      for (int i = 1; i <= lam.n(); ++i)
        if (U >> (i - 1) & 1u) v += b[i];
      if (!seen.insert(v).second) return false;
    }
  }
  return true;
}

}  // namespace spinlab
