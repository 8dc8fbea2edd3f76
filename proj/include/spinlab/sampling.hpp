#pragma once
// Deterministic random inputs: rationals of small height, vectors, GSpin/GPin
// elements, torus points and dominant weights.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "spinlab/clifford.hpp"
#include "spinlab/rootdata.hpp"

namespace spinlab {

inline std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// FNV-1a; std::hash is not stable across implementations
inline std::uint64_t stable_hash(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  // independent stream for (seed, key, n)
  static Rng derive(std::uint64_t seed, std::string_view key, int n) {
    std::uint64_t x = seed;
    std::uint64_t a = splitmix64(x);
    x ^= stable_hash(key);
    std::uint64_t b = splitmix64(x);
    x ^= static_cast<std::uint64_t>(n) * 0x100000001B3ULL;
    std::uint64_t c = splitmix64(x);
    return Rng(a ^ (b << 1) ^ (c << 2));
  }

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool coin() { return uniform(0, 1) == 1; }
  long nonzero(long bound = 9) {
    long v = uniform(-bound, bound - 1);
    return v >= 0 ? v + 1 : v;
  }
  // numerator and denominator drawn from [−9, 9] \ {0}
  Rational rational() {
    Rational r(nonzero(), nonzero());
    r.canonicalize();
    return r;
  }
  GaussRat scalar() { return GaussRat(rational()); }

  std::vector<GaussRat> vector(const QuadSpace& V, long bound = 3) {
    std::vector<GaussRat> v(V.dim());
    bool any = false;
    while (!any)
      for (auto& x : v) {
        x = coin() ? GaussRat(uniform(-bound, bound)) : GaussRat();
        any = any || !x.is_zero();
      }
    return v;
  }
  std::vector<GaussRat> anisotropic(const QuadSpace& V) {
    for (;;) {
      auto v = vector(V);
      if (!V.quad(v).is_zero()) return v;
    }
  }

  // scalar × product of `factors` anisotropic vectors
  GPinElement versor(const QuadSpace& V, int factors) {
    CliffordElement x = CliffordElement::scalar(V, scalar());
    for (int k = 0; k < factors; ++k) x = x * CliffordElement::vector(V, anisotropic(V));
    return GPinElement(x);
  }
  GPinElement gspin(const QuadSpace& V) { return versor(V, 2); }
  GPinElement gpin_odd(const QuadSpace& V) { return versor(V, 1 + 2 * static_cast<int>(uniform(0, 1))); }
  GPinElement gpin(const QuadSpace& V) { return coin() ? gspin(V) : versor(V, 1); }

  TorusElement torus(int n) {
    std::vector<GaussRat> a(n), b(n);
    for (int i = 0; i < n; ++i) {
      a[i] = scalar();
      b[i] = scalar();
    }
    return torus_clifford_element(scalar(), a, b);
  }
  TorusCoordinates torus_coords(int n) {
    TorusCoordinates s(n + 1);
    for (auto& x : s) x = scalar();
    return s;
  }
  // torus element times two anisotropic vectors: a generic-looking GSpin element
  GPinElement gspin_mixed(int n) {
    QuadSpace V = QuadSpace::even(n);
    return torus(n).g * gspin(V);
  }

  WeylElement weyl(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    std::shuffle(p.begin(), p.end(), eng_);
    std::vector<int> s(n, 1);
    int flips = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (coin()) {
        s[i] = -1;
        ++flips;
      }
    if (flips % 2) s[n - 1] = -1;
    return WeylElement(p, s);
  }

  // (a_0, a_1 ≥ … ≥ a_{n−1} ≥ |a_n|), entries of size up to `bound`
  WeightVector dominant(int n, long bound = 8) {
    WeightVector a(n + 1);
    a[0] = uniform(-bound, bound);
    long cur = uniform(0, bound);
    a[1] = cur;
    for (int i = 2; i < n; ++i) a[i] = cur = uniform(0, cur);
    long last = uniform(0, n >= 2 ? a[n - 1] : cur);
    a[n] = coin() ? last : -last;
    return a;
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace spinlab
