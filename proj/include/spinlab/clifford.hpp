#pragma once
// Clifford algebras of the split quadratic spaces V_2n and V_2n-1, the
// groups GPin/GSpin, the projections pr and pr°, and the elements ϑ, ϑ°.

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "spinlab/exact_arith.hpp"

namespace spinlab {

struct SpaceMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct GeometryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct MembershipError : std::domain_error {
  using std::domain_error::domain_error;
};
struct ParityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class SpaceKind { Even, Odd, Custom };

namespace detail {

struct SpaceData {
  SpaceKind kind;
  int n;  // rank parameter; for Custom equals dim
  int dim;
  std::vector<long> gram;  // dim*dim, <e_j,e_k>
  std::uint32_t id;
};

inline std::shared_ptr<const SpaceData> intern_space(SpaceKind kind, int n, int dim,
                                                     std::vector<long> gram) {
  static std::mutex mu;
  static std::map<std::vector<long>, std::shared_ptr<const SpaceData>> table;
  std::lock_guard<std::mutex> lock(mu);
  std::vector<long> key = gram;
  key.push_back(static_cast<long>(kind));
  key.push_back(n);
  auto it = table.find(key);
  if (it != table.end()) return it->second;
  auto d = std::make_shared<SpaceData>(
      SpaceData{kind, n, dim, std::move(gram), static_cast<std::uint32_t>(table.size() + 1)});
  table.emplace(std::move(key), d);
  return d;
}

}  // namespace detail

// Basis vectors are 1-based in the interface (e_1..e_m), bit j-1 internally.
class QuadSpace {
 public:
  QuadSpace() : QuadSpace(even(1)) {}

  static QuadSpace even(int n) {
    if (n < 1 || 2 * n > 24) throw DomainError("even space: unsupported n");
    int m = 2 * n;
    std::vector<long> g(m * m, 0);
    for (int j = 0; j < n; ++j) g[j * m + n + j] = g[(n + j) * m + j] = 1;
    return QuadSpace(detail::intern_space(SpaceKind::Even, n, m, std::move(g)));
  }
  // f_i pairs with f_{n-1+i}; Q(f_{2n-1}) = 1
  static QuadSpace odd(int n) {
    if (n < 1 || 2 * n - 1 > 24) throw DomainError("odd space: unsupported n");
    int m = 2 * n - 1;
    std::vector<long> g(m * m, 0);
    for (int j = 0; j < n - 1; ++j) g[j * m + n - 1 + j] = g[(n - 1 + j) * m + j] = 1;
    g[(m - 1) * m + m - 1] = 2;
    return QuadSpace(detail::intern_space(SpaceKind::Odd, n, m, std::move(g)));
  }
  // diagonal of gram must be even so that Q is integral on the basis
  static QuadSpace custom(int dim, std::vector<long> gram) {
    if (static_cast<int>(gram.size()) != dim * dim) throw DimensionError("custom space gram");
    for (int j = 0; j < dim; ++j) {
      if (gram[j * dim + j] % 2 != 0) throw GeometryError("custom space: odd diagonal");
      for (int k = 0; k < dim; ++k)
        if (gram[j * dim + k] != gram[k * dim + j]) throw GeometryError("custom space: asymmetric");
    }
    return QuadSpace(detail::intern_space(SpaceKind::Custom, dim, dim, std::move(gram)));
  }

  SpaceKind kind() const { return d_->kind; }
  int n() const { return d_->n; }
  int dim() const { return d_->dim; }
  std::uint32_t id() const { return d_->id; }
  // 0-based
  long pair(int j, int k) const { return d_->gram[j * d_->dim + k]; }
  long q(int j) const { return d_->gram[j * d_->dim + j] / 2; }

  Mat gram_matrix() const {
    Mat b(dim(), dim());
    for (int j = 0; j < dim(); ++j)
      for (int k = 0; k < dim(); ++k) b(j, k) = pair(j, k);
    return b;
  }

  GaussRat pairing(const std::vector<GaussRat>& v, const std::vector<GaussRat>& w) const {
    GaussRat s;
    for (int j = 0; j < dim(); ++j) {
      if (v[j].is_zero()) continue;
      for (int k = 0; k < dim(); ++k)
        if (pair(j, k) != 0 && !w[k].is_zero()) s += GaussRat(pair(j, k)) * v[j] * w[k];
    }
    return s;
  }
  GaussRat quad(const std::vector<GaussRat>& v) const {
    return pairing(v, v) * GaussRat(rat(1, 2));
  }

  std::string name() const {
    switch (kind()) {
      case SpaceKind::Even: return "V" + std::to_string(dim());
      case SpaceKind::Odd: return "V" + std::to_string(dim());
      default: return "W" + std::to_string(id());
    }
  }

  friend bool operator==(const QuadSpace& a, const QuadSpace& b) { return a.d_ == b.d_; }
  friend bool operator!=(const QuadSpace& a, const QuadSpace& b) { return a.d_ != b.d_; }

 private:
  explicit QuadSpace(std::shared_ptr<const detail::SpaceData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::SpaceData> d_;
};

using Monomial = std::uint32_t;
using IntTerms = std::vector<std::pair<Monomial, long>>;

namespace detail {

inline void add_term(std::map<Monomial, long>& acc, Monomial m, long c) {
  if (c == 0) return;
  auto [it, fresh] = acc.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

// e_S * e_t (t 0-based): move e_t left past larger indices, contracting.
inline void mul_generator(const QuadSpace& V, Monomial s, int t, long coef,
                          std::map<Monomial, long>& out) {
  long sign = coef;
  for (int k = V.dim() - 1; k >= 0; --k) {
    if (!(s >> k & 1u)) continue;
    if (k > t) {
      long b = V.pair(k, t);
      if (b != 0) add_term(out, s & ~(1u << k), sign * b);
      sign = -sign;
    } else if (k == t) {
      add_term(out, s & ~(1u << k), sign * V.q(t));
      return;
    } else {
      break;
    }
  }
  add_term(out, s | (1u << t), sign);
}

inline std::uint64_t cache_key(const QuadSpace& V, Monomial a, Monomial b) {
  return (static_cast<std::uint64_t>(V.id()) << 48) | (static_cast<std::uint64_t>(a) << 24) | b;
}

inline const IntTerms& monomial_product(const QuadSpace& V, Monomial a, Monomial b) {
  thread_local std::unordered_map<std::uint64_t, IntTerms> cache;
  auto key = cache_key(V, a, b);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::map<Monomial, long> cur{{a, 1}};
  for (int t = 0; t < V.dim(); ++t) {
    if (!(b >> t & 1u)) continue;
    std::map<Monomial, long> nxt;
    for (auto& [m, c] : cur) mul_generator(V, m, t, c, nxt);
    cur.swap(nxt);
  }
  return cache.emplace(key, IntTerms(cur.begin(), cur.end())).first->second;
}

// Split spaces factor as a graded product of hyperbolic planes ⟨e_i, f_i⟩ (plus
// one anisotropic u for V_2n-1). In a plane: e² = f² = 0, ef + fe = 1, so the
// only branching product is f·e = 1 − ef. Emits (monomial, ±1 or ±Q(u)).
template <class Emit>
inline void split_product(const QuadSpace& V, Monomial a, Monomial b, Emit&& emit) {
  const int h = V.kind() == SpaceKind::Even ? V.n() : V.n() - 1;
  const Monomial L = (1u << h) - 1;
  const Monomial ae = a & L, af = (a >> h) & L, be = b & L, bf = (b >> h) & L;
  if ((ae & ~af & be) | (af & ~be & bf)) return;
  // sign of regrouping e_A (increasing order) into e_1 f_1 e_2 f_2 ⋯ u
  auto regroup = [](Monomial e, Monomial f) {
    int inv = 0;
    for (Monomial x = f; x; x &= x - 1) inv += std::popcount(e & ~((2u << std::countr_zero(x)) - 1));
    return inv & 1;
  };
  const Monomial au = a >> (2 * h), bu = b >> (2 * h);
  const Monomial pa = ae ^ af, pb = be ^ bf;
  int sgn = regroup(ae, af) ^ regroup(be, bf);
  for (Monomial x = pb; x; x &= x - 1) sgn ^= (std::popcount(pa & ~((2u << std::countr_zero(x)) - 1)) + au) & 1;
  // deterministic part of the result and the f·e branch pairs
  Monomial re = 0, rf = 0, branch = af & ~ae & be & ~bf;
  for (int i = 0; i < h; ++i) {
    const Monomial bit = 1u << i;
    if (branch & bit) continue;
    const int ca = (ae & bit ? 1 : 0) | (af & bit ? 2 : 0), cb = (be & bit ? 1 : 0) | (bf & bit ? 2 : 0);
    int r;
    if (ca == 0) r = cb;
    else if (cb == 0) r = ca;
    else if (ca == 1) r = 3;        // e·f
    else if (ca == 2) r = 2;        // f·ef
    else r = cb == 1 ? 1 : 3;       // ef·e, ef·ef
    if (r & 1) re |= bit;
    if (r & 2) rf |= bit;
  }
  long coef = (au & bu) ? V.q(2 * h) : 1;
  const Monomial ru = (au ^ bu) << (2 * h);
  // subsets of the branch pairs that take the −ef term
  Monomial sub = 0;
  do {
    const Monomial e = re | sub, f = rf | sub;
    int s = sgn ^ (std::popcount(sub) & 1) ^ regroup(e, f);
    emit(e | (f << h) | ru, s ? -coef : coef);
    sub = (sub - branch) & branch;
  } while (sub);
}

// e_{s_r} ... e_{s_1}
inline const IntTerms& monomial_reverse(const QuadSpace& V, Monomial a) {
  thread_local std::unordered_map<std::uint64_t, IntTerms> cache;
  auto key = cache_key(V, a, 0xFFFFFFu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::map<Monomial, long> cur{{0, 1}};
  for (int t = V.dim() - 1; t >= 0; --t) {
    if (!(a >> t & 1u)) continue;
    std::map<Monomial, long> nxt;
    for (auto& [m, c] : cur) mul_generator(V, m, t, c, nxt);
    cur.swap(nxt);
  }
  return cache.emplace(key, IntTerms(cur.begin(), cur.end())).first->second;
}

}  // namespace detail

class CliffordElement {
 public:
  using Terms = std::map<Monomial, GaussRat>;

  CliffordElement() = default;
  explicit CliffordElement(QuadSpace V) : V_(std::move(V)) {}
  CliffordElement(QuadSpace V, Terms t) : V_(std::move(V)), t_(std::move(t)) { prune(); }

  static CliffordElement scalar(const QuadSpace& V, const GaussRat& c) {
    CliffordElement x(V);
    if (!c.is_zero()) x.t_[0] = c;
    return x;
  }
  static CliffordElement one(const QuadSpace& V) { return scalar(V, 1); }
  // e_j, 1-based
  static CliffordElement gen(const QuadSpace& V, int j) {
    if (j < 1 || j > V.dim()) throw DomainError("generator index out of range");
    CliffordElement x(V);
    x.t_[1u << (j - 1)] = 1;
    return x;
  }
  static CliffordElement vector(const QuadSpace& V, const std::vector<GaussRat>& v) {
    if (static_cast<int>(v.size()) != V.dim()) throw DimensionError("vector length");
    CliffordElement x(V);
    for (int j = 0; j < V.dim(); ++j)
      if (!v[j].is_zero()) x.t_[1u << j] = v[j];
    return x;
  }
  // product e_{i_1} ... e_{i_k} in the given order, 1-based
  static CliffordElement word(const QuadSpace& V, const std::vector<int>& idx) {
    CliffordElement x = one(V);
    for (int j : idx) x = x * gen(V, j);
    return x;
  }

  const QuadSpace& space() const { return V_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  GaussRat coeff(Monomial m) const {
    auto it = t_.find(m);
    return it == t_.end() ? GaussRat() : it->second;
  }

  std::optional<GaussRat> as_scalar() const {
    if (t_.empty()) return GaussRat();
    if (t_.size() == 1 && t_.begin()->first == 0) return t_.begin()->second;
    return std::nullopt;
  }

  // coordinates if the element lies in V (degree-1 part only)
  std::optional<std::vector<GaussRat>> as_vector() const {
    std::vector<GaussRat> v(V_.dim());
    for (auto& [m, c] : t_) {
      if (std::popcount(m) != 1) return std::nullopt;
      v[std::countr_zero(m)] = c;
    }
    return v;
  }

  // 0 even, 1 odd, -1 inhomogeneous or zero
  int parity() const {
    int p = -1;
    for (auto& [m, c] : t_) {
      int q = std::popcount(m) & 1;
      if (p == -1)
        p = q;
      else if (p != q)
        return -1;
    }
    return p;
  }

  CliffordElement operator-() const {
    CliffordElement r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
  }
  friend CliffordElement operator+(const CliffordElement& x, const CliffordElement& y) {
    check_same(x, y);
    CliffordElement r = x;
    for (auto& [m, c] : y.t_) r.t_[m] += c;
    r.prune();
    return r;
  }
  friend CliffordElement operator-(const CliffordElement& x, const CliffordElement& y) {
    return x + (-y);
  }
  friend CliffordElement operator*(const GaussRat& s, const CliffordElement& x) {
    if (s.is_zero()) return CliffordElement(x.V_);
    CliffordElement r = x;
    for (auto& [m, c] : r.t_) c = s * c;
    return r;
  }
  friend CliffordElement operator*(const CliffordElement& x, const CliffordElement& y) {
    check_same(x, y);
    Terms acc;
    if (x.V_.kind() != SpaceKind::Custom) {
      for (auto& [a, ca] : x.t_)
        for (auto& [b, cb] : y.t_) {
          GaussRat ab;
          bool have = false;
          detail::split_product(x.V_, a, b, [&](Monomial m, long k) {
            if (!have) {
              ab = ca * cb;
              have = true;
            }
            if (k == 1)
              acc[m] += ab;
            else if (k == -1)
              acc[m] -= ab;
            else
              acc[m] += GaussRat(k) * ab;
          });
        }
      return CliffordElement(x.V_, std::move(acc));
    }
    for (auto& [a, ca] : x.t_)
      for (auto& [b, cb] : y.t_) {
        const IntTerms& pr = detail::monomial_product(x.V_, a, b);
        if (pr.empty()) continue;
        GaussRat ab = ca * cb;
        for (auto& [m, k] : pr) {
          if (k == 1)
            acc[m] += ab;
          else if (k == -1)
            acc[m] -= ab;
          else
            acc[m] += GaussRat(k) * ab;
        }
      }
    return CliffordElement(x.V_, std::move(acc));
  }
  friend bool operator==(const CliffordElement& x, const CliffordElement& y) {
    return x.V_ == y.V_ && x.t_ == y.t_;
  }
  friend bool operator!=(const CliffordElement& x, const CliffordElement& y) { return !(x == y); }

  CliffordElement pow(unsigned k) const {
    CliffordElement r = one(V_), b = *this;
    while (k) {
      if (k & 1) r = r * b;
      k >>= 1;
      if (k) b = b * b;
    }
    return r;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto& [m, c] : t_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")";
      for (int j = 0; j < V_.dim(); ++j)
        if (m >> j & 1u) s += "e" + std::to_string(j + 1);
    }
    return s;
  }

 private:
  static void check_same(const CliffordElement& x, const CliffordElement& y) {
    if (x.V_ != y.V_) throw SpaceMismatch("Clifford elements from different spaces");
  }
  void prune() {
    for (auto it = t_.begin(); it != t_.end();)
      it = it->second.is_zero() ? t_.erase(it) : std::next(it);
  }

  QuadSpace V_;
  Terms t_;
};

inline std::ostream& operator<<(std::ostream& os, const CliffordElement& x) { return os << x.str(); }

inline CliffordElement beta(const CliffordElement& x) {
  CliffordElement::Terms acc;
  for (auto& [m, c] : x.terms())
    for (auto& [r, k] : detail::monomial_reverse(x.space(), m)) acc[r] += GaussRat(k) * c;
  return CliffordElement(x.space(), std::move(acc));
}

// <y z>_0. On split spaces only the partner of each monomial (f's ↦ e's, u ↦ u)
// contributes, so this is linear in the number of terms.
inline GaussRat scalar_part(const CliffordElement& y, const CliffordElement& z) {
  const QuadSpace& V = y.space();
  if (V.kind() == SpaceKind::Custom) return (y * z).coeff(0);
  const int h = V.kind() == SpaceKind::Even ? V.n() : V.n() - 1;
  const Monomial L = (1u << h) - 1;
  GaussRat s;
  for (auto& [a, ca] : y.terms()) {
    if (a & L) continue;
    Monomial b = ((a >> h) & L) | (a >> (2 * h) << (2 * h));
    GaussRat cb = z.coeff(b);
    if (cb.is_zero()) continue;
    long k = 0;
    detail::split_product(V, a, b, [&](Monomial m, long c) {
      if (m == 0) k += c;
    });
    if (k) s += GaussRat(k) * ca * cb;
  }
  return s;
}

// Homogeneous invertible element normalizing V. Membership is checked on
// construction; pr° and 𝒩 are computed once.
class GPinElement {
 public:
  explicit GPinElement(CliffordElement x) : x_(std::move(x)) {
    const QuadSpace& V = x_.space();
    int p = x_.parity();
    if (p < 0) throw MembershipError("GPin: element is zero or not homogeneous");
    parity_ = p;
    if (V.kind() == SpaceKind::Custom) {
      check_by_products();
    } else {
      check_by_scalar_parts();
    }
  }

  const CliffordElement& value() const { return x_; }
  const QuadSpace& space() const { return x_.space(); }
  int parity() const { return parity_; }
  bool is_even() const { return parity_ == 0; }
  const GaussRat& norm() const { return norm_; }
  const Mat& pr_circ() const { return prc_; }
  Mat pr() const { return norm_ * prc_; }
  const CliffordElement& inverse_value() const { return inv_; }
  GPinElement inverse() const { return GPinElement(inv_); }

  friend GPinElement operator*(const GPinElement& a, const GPinElement& b) {
    return GPinElement(a.x_ * b.x_);
  }

 private:
  void check_by_products() {
    const QuadSpace& V = x_.space();
    auto nrm = (x_ * beta(x_)).as_scalar();
    if (!nrm) throw MembershipError("GPin: x*beta(x) is not a scalar");
    if (nrm->is_zero()) throw MembershipError("GPin: element is not invertible");
    norm_ = *nrm;
    inv_ = norm_.inv() * beta(x_);
    prc_ = Mat(V.dim(), V.dim());
    for (int j = 1; j <= V.dim(); ++j) {
      auto img = (x_ * CliffordElement::gen(V, j) * inv_).as_vector();
      if (!img) throw MembershipError("GPin: conjugation does not preserve V");
      for (int r = 0; r < V.dim(); ++r) prc_(r, j - 1) = (*img)[r];
    }
  }

  // Candidate v_j from B(v_j, e_m) = <v_j e_m + e_m v_j>_0 with v_j = x e_j x⁻¹ and
  // x⁻¹ = β(x)/<xβ(x)>_0 (<·>_0 is not a trace in this basis, so both orders),
  // then x e_j = v_j x exactly for all j and pr° invertible. Those force xβ(x)
  // to commute with V; being even it is then a scalar, equal to its scalar part.
  void check_by_scalar_parts() {
    const QuadSpace& V = x_.space();
    const int d = V.dim();
    CliffordElement bx = beta(x_);
    GaussRat n0 = scalar_part(x_, bx);
    if (n0.is_zero()) throw MembershipError("GPin: element is not invertible");
    norm_ = n0;
    inv_ = n0.inv() * bx;
    std::vector<CliffordElement> w;
    for (int m = 1; m <= d; ++m) w.push_back(inv_ * CliffordElement::gen(V, m));
    Mat ginv = spinlab::inverse(V.gram_matrix());
    prc_ = Mat(d, d);
    for (int j = 1; j <= d; ++j) {
      CliffordElement y = x_ * CliffordElement::gen(V, j);
      std::vector<GaussRat> b(d);
      for (int m = 0; m < d; ++m)
        b[m] = scalar_part(y, w[m]) + scalar_part(CliffordElement::gen(V, m + 1) * y, inv_);
      auto v = ginv.apply(b);
      if (y != CliffordElement::vector(V, v) * x_) throw MembershipError("GPin: conjugation does not preserve V");
      for (int r = 0; r < d; ++r) prc_(r, j - 1) = v[r];
    }
    if (rank(prc_) != static_cast<std::size_t>(d)) throw MembershipError("GPin: conjugation is not injective on V");
  }

 public:
  friend bool operator==(const GPinElement& a, const GPinElement& b) { return a.x_ == b.x_; }
  friend bool operator!=(const GPinElement& a, const GPinElement& b) { return a.x_ != b.x_; }

 private:
  CliffordElement x_;
  int parity_ = 0;
  GaussRat norm_;
  CliffordElement inv_;
  Mat prc_;
};

inline GaussRat spinor_norm(const GPinElement& g) { return g.norm(); }
inline Mat pr_circ(const GPinElement& g) { return g.pr_circ(); }
inline Mat pr(const GPinElement& g) { return g.pr(); }

// similitude factor of g with g^T B g = sim(g) B
inline GaussRat similitude(const Mat& g, const Mat& gram) {
  Mat lhs = g.transpose() * gram * g;
  for (std::size_t r = 0; r < gram.rows(); ++r)
    for (std::size_t c = 0; c < gram.cols(); ++c)
      if (!gram(r, c).is_zero()) {
        GaussRat s = lhs(r, c) / gram(r, c);
        if (lhs != s * gram) throw DomainError("matrix is not a similitude");
        return s;
      }
  throw DomainError("degenerate form");
}

// Isometric embedding of a quadratic space into V: images of the basis.
struct Embedding {
  QuadSpace source;
  QuadSpace target;
  std::vector<std::vector<GaussRat>> images;  // images[j] in target coordinates

  void check_isometry() const {
    if (static_cast<int>(images.size()) != source.dim()) throw GeometryError("embedding size");
    for (int j = 0; j < source.dim(); ++j)
      for (int k = 0; k < source.dim(); ++k)
        if (target.pairing(images[j], images[k]) != GaussRat(source.pair(j, k)))
          throw GeometryError("embedding is not an isometry");
  }

  CliffordElement apply(const CliffordElement& x) const {
    if (x.space() != source) throw SpaceMismatch("embedding applied to wrong space");
    CliffordElement out(target);
    std::vector<CliffordElement> gens;
    for (auto& v : images) gens.push_back(CliffordElement::vector(target, v));
    for (auto& [m, c] : x.terms()) {
      CliffordElement mono = CliffordElement::one(target);
      for (int j = 0; j < source.dim(); ++j)
        if (m >> j & 1u) mono = mono * gens[j];
      out = out + c * mono;
    }
    return out;
  }
};

// w1 ⊗̂ w2 ↦ w1 w2 for an orthogonal decomposition V = φ(W1) ⊕ φ'(W2)
inline CliffordElement c_phi(const CliffordElement& x, const Embedding& phi1,
                             const CliffordElement& y, const Embedding& phi2) {
  if (phi1.target != phi2.target) throw GeometryError("embeddings into different spaces");
  phi1.check_isometry();
  phi2.check_isometry();
  for (auto& a : phi1.images)
    for (auto& b : phi2.images)
      if (!phi1.target.pairing(a, b).is_zero()) throw GeometryError("decomposition is not orthogonal");
  if (phi1.source.dim() + phi2.source.dim() != phi1.target.dim())
    throw GeometryError("decomposition does not span V");
  return phi1.apply(x) * phi2.apply(y);
}

// The line spanned by e_n - e_2n, with Q = -1.
inline QuadSpace line_space() { return QuadSpace::custom(1, {-2}); }

inline Embedding phi_embedding(int n) {
  QuadSpace W = QuadSpace::odd(n), V = QuadSpace::even(n);
  Embedding e{W, V, {}};
  for (int j = 1; j <= 2 * n - 1; ++j) {
    std::vector<GaussRat> v(2 * n);
    if (j <= n - 1)
      v[j - 1] = 1;
    else if (j <= 2 * n - 2)
      v[n + (j - (n - 1)) - 1] = 1;
    else
      v[n - 1] = v[2 * n - 1] = 1;
    e.images.push_back(v);
  }
  return e;
}

inline Embedding phi_prime_embedding(int n) {
  std::vector<GaussRat> v(2 * n);
  v[n - 1] = 1;
  v[2 * n - 1] = -1;
  return Embedding{line_space(), QuadSpace::even(n), {v}};
}

inline CliffordElement i_std_value(const CliffordElement& x) {
  int n = x.space().n();
  if (x.space().kind() != SpaceKind::Odd) throw SpaceMismatch("i_std expects an element of C(V_2n-1)");
  return c_phi(x, phi_embedding(n), CliffordElement::one(line_space()), phi_prime_embedding(n));
}

inline GPinElement i_std(const GPinElement& g) { return GPinElement(i_std_value(g.value())); }

// ϑ = √−1 (e_n − e_2n)
inline GPinElement vartheta(int n) {
  QuadSpace V = QuadSpace::even(n);
  return GPinElement(GaussRat::i() *
                     (CliffordElement::gen(V, n) - CliffordElement::gen(V, 2 * n)));
}

// ϑ° = −(permutation matrix swapping n and 2n)
inline Mat vartheta_circ(int n) {
  Mat m(2 * n, 2 * n);
  for (int j = 0; j < 2 * n; ++j) {
    int k = j == n - 1 ? 2 * n - 1 : j == 2 * n - 1 ? n - 1 : j;
    m(k, j) = -1;
  }
  return m;
}

inline GPinElement theta(const GPinElement& g) {
  if (g.space().kind() != SpaceKind::Even) throw SpaceMismatch("theta acts on GPin_2n");
  GPinElement t = vartheta(g.space().n());
  return GPinElement(t.value() * g.value() * t.inverse_value());
}

inline Mat theta_circ(const Mat& g) {
  int n = static_cast<int>(g.rows()) / 2;
  Mat w = vartheta_circ(n);
  return w * g * w;
}

}  // namespace spinlab
