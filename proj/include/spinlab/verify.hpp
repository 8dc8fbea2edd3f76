#pragma once
// Registry of verification suites keyed by lemma/equation label, and the
// deterministic runner behind `spinlab verify`.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "spinlab/clifford.hpp"
#include "spinlab/cocycle.hpp"
#include "spinlab/conjtest.hpp"
#include "spinlab/hodge.hpp"
#include "spinlab/json_io.hpp"
#include "spinlab/rootdata.hpp"
#include "spinlab/sampling.hpp"
#include "spinlab/spinrep.hpp"

namespace spinlab {

inline constexpr const char* kVersion = "0.1.0";

struct Outcome {
  bool pass = true;
  long checks = 0;
  json counterexample;

  void expect(bool ok, const std::function<json()>& payload) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      counterexample = payload();
    }
  }
  void expect(bool ok, const std::string& what) {
    expect(ok, [&] { return json{{"check", what}}; });
  }
};

struct Suite {
  std::string key;
  std::string title;
  int fixed_n = 0;  // nonzero: runs once at this n regardless of --n
  std::function<void(int n, int trials, Rng& rng, Outcome& out)> run;
};

namespace detail {

inline bool is_orthogonal(const Mat& g, const Mat& B) { return g.transpose() * B * g == B; }

inline std::vector<GaussRat> sorted(std::vector<GaussRat> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<GaussRat> diagonal(const Mat& m) {
  std::vector<GaussRat> d;
  for (std::size_t k = 0; k < m.rows(); ++k) d.push_back(m(k, k));
  return d;
}

inline bool is_diagonal(const Mat& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c && !m(r, c).is_zero()) return false;
  return true;
}

inline json coords_json(const TorusCoordinates& s) { return to_json(s); }

// change of basis from e-coordinates to (φ(f_1), …, φ(f_2n−1), e_n − e_2n)
inline Mat phi_basis(int n) {
  Mat M(2 * n, 2 * n);
  auto phi = phi_embedding(n);
  for (int j = 0; j < 2 * n - 1; ++j)
    for (int r = 0; r < 2 * n; ++r) M(r, j) = phi.images[j][r];
  auto u = phi_prime_embedding(n).images[0];
  for (int r = 0; r < 2 * n; ++r) M(r, 2 * n - 1) = u[r];
  return M;
}

inline CliffordElement random_element(const QuadSpace& V, Rng& rng, int terms = 4) {
  CliffordElement::Terms t;
  for (int k = 0; k < terms; ++k)
    t[static_cast<Monomial>(rng.uniform(0, (1L << V.dim()) - 1))] += GaussRat(rng.nonzero(5));
  return CliffordElement(V, std::move(t));
}

inline TorusCoordinates gso_point(const TorusCoordinates& s) {
  // pr of a T_GSpin point: t_i = 𝒩 s_i, t_0 = 𝒩²
  GaussRat N = s[0] * s[0];
  for (std::size_t i = 1; i < s.size(); ++i) N *= s[i];
  TorusCoordinates t(s.size());
  t[0] = N * N;
  for (std::size_t i = 1; i < s.size(); ++i) t[i] = N * s[i];
  return t;
}

inline Mat gso_matrix(const TorusCoordinates& t) {
  int n = static_cast<int>(t.size()) - 1;
  std::vector<GaussRat> d(2 * n);
  for (int i = 1; i <= n; ++i) {
    d[i - 1] = t[i];
    d[n + i - 1] = t[0] / t[i];
  }
  return Mat::diag(d);
}

inline bool all_distinct(std::vector<long> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

}  // namespace detail

inline const std::vector<Suite>& suite_registry() {
  using namespace detail;
  static const std::vector<Suite> suites = [] {
    std::vector<Suite> S;

    S.push_back({"eq:StdQuadSpace", "split quadratic forms and the isometry φ ⊕ φ'", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   QuadSpace V = QuadSpace::even(n), W = QuadSpace::odd(n);
                   for (int j = 0; j < 2 * n; ++j) {
                     o.expect(V.q(j) == 0, "Q(e_j) = 0");
                     for (int k = 0; k < 2 * n; ++k)
                       o.expect(V.pair(j, k) == (std::abs(j - k) == n ? 1 : 0), "<e_j, e_k>");
                   }
                   o.expect(W.q(2 * n - 2) == 1, "Q(f_2n-1) = 1");
                   auto phi = phi_embedding(n), phip = phi_prime_embedding(n);
                   bool iso = true;
                   try {
                     phi.check_isometry();
                     phip.check_isometry();
                   } catch (const GeometryError&) {
                     iso = false;
                   }
                   o.expect(iso, "φ and φ' are isometries");
                   for (int t = 0; t < trials; ++t) {
                     auto y = rng.vector(W);
                     GaussRat q;
                     for (int i = 0; i < n - 1; ++i) q += y[i] * y[n - 1 + i];
                     q += y[2 * n - 2] * y[2 * n - 2];
                     std::vector<GaussRat> img(2 * n);
                     for (int j = 0; j < 2 * n - 1; ++j)
                       for (int r = 0; r < 2 * n; ++r) img[r] += y[j] * phi.images[j][r];
                     o.expect(W.quad(y) == q && V.quad(img) == q, [&] {
                       return json{{"check", "Q_2n(φ(y)) = Q_2n-1(y)"}, {"trial", t}, {"y", to_json(y)}};
                     });
                   }
                 }});

    S.push_back({"eq:betaInvolution", "vw + wv = <v,w>, v² = Q(v), β anti-involution", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   for (QuadSpace V : {QuadSpace::even(n), QuadSpace::odd(n)})
                     for (int t = 0; t < trials; ++t) {
                       auto v = rng.vector(V), w = rng.vector(V);
                       auto cv = CliffordElement::vector(V, v), cw = CliffordElement::vector(V, w);
                       o.expect(cv * cw + cw * cv == CliffordElement::scalar(V, V.pairing(v, w)), [&] {
                         return json{{"check", "vw+wv"}, {"trial", t}, {"v", to_json(v)}, {"w", to_json(w)}};
                       });
                       o.expect(cv * cv == CliffordElement::scalar(V, V.quad(v)), "v^2 = Q(v)");
                       o.expect(beta(cv) == cv, "β(v) = v");
                       auto x = random_element(V, rng), y = random_element(V, rng);
                       o.expect(beta(x * y) == beta(y) * beta(x) && beta(beta(x)) == x, [&] {
                         return json{{"check", "β anti-involution"}, {"trial", t}, {"x", to_json(x)}, {"y", to_json(y)}};
                       });
                     }
                 }});

    S.push_back({"lem:SurjectionOntoGSO", "pr°, pr, 𝒩 are homomorphisms; pr = 𝒩 pr°; sim∘pr = 𝒩²", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   QuadSpace V = QuadSpace::even(n);
                   Mat B = V.gram_matrix();
                   for (int t = 0; t < trials; ++t) {
                     auto g = rng.gspin(V), h = rng.gspin(V);
                     auto gh = g * h;
                     auto cex = [&] {
                       return json{{"trial", t}, {"g", to_json(g.value())}, {"h", to_json(h.value())}};
                     };
                     o.expect(gh.pr_circ() == g.pr_circ() * h.pr_circ(), cex);
                     o.expect(gh.pr() == g.pr() * h.pr(), cex);
                     o.expect(gh.norm() == g.norm() * h.norm(), cex);
                     o.expect(g.pr() == g.norm() * g.pr_circ(), cex);
                     o.expect(similitude(g.pr(), B) == g.norm() * g.norm(), cex);
                     o.expect(is_orthogonal(g.pr_circ(), B) && det(g.pr_circ()) == GaussRat(1), cex);
                   }
                   // kernel of (pr°, 𝒩) among scalars is {±1}
                   for (auto c : {GaussRat(1), GaussRat(-1), GaussRat::i(), -GaussRat::i(), GaussRat(2), GaussRat(rat(1, 3))}) {
                     GPinElement x(CliffordElement::scalar(V, c));
                     bool in_kernel = x.pr_circ().is_identity() && x.norm() == GaussRat(1);
                     o.expect(x.pr_circ().is_identity(), "pr°(c) = I");
                     o.expect(in_kernel == (c == GaussRat(1) || c == GaussRat(-1)), "ker(pr°, 𝒩) = μ2");
                   }
                 }});

    S.push_back({"lem:CliffordMapping", "C_φ is a graded algebra map and respects β", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   QuadSpace W = QuadSpace::odd(n), L = line_space();
                   auto phi = phi_embedding(n), phip = phi_prime_embedding(n);
                   auto one_l = CliffordElement::one(L), u = CliffordElement::gen(L, 1);
                   for (int t = 0; t < trials; ++t) {
                     auto g = rng.gspin(W), h = rng.gspin(W);
                     o.expect(i_std_value((g * h).value()) == i_std_value(g.value()) * i_std_value(h.value()), [&] {
                       return json{{"check", "i_std morphism"}, {"trial", t}, {"g", to_json(g.value())}, {"h", to_json(h.value())}};
                     });
                     auto a = rng.gpin(W), c = rng.gpin(W);
                     for (auto& b : {one_l, u})
                       for (auto& d : {one_l, u}) {
                         int ka = a.parity(), kb = b.parity(), kc = c.parity();
                         GaussRat sgn_beta((ka * kb) % 2 ? -1 : 1), sgn_mul((kb * kc) % 2 ? -1 : 1);
                         o.expect(beta(c_phi(a.value(), phi, b, phip)) ==
                                      sgn_beta * c_phi(beta(a.value()), phi, beta(b), phip),
                                  "β∘C_φ sign rule");
                         o.expect(c_phi(a.value(), phi, b, phip) * c_phi(c.value(), phi, d, phip) ==
                                      sgn_mul * c_phi(a.value() * c.value(), phi, b * d, phip),
                                  "graded tensor product rule");
                       }
                   }
                 }});

    S.push_back({"lem:CliffordMapping2", "pr°∘C_φ is the block diagonal embedding", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   QuadSpace W = QuadSpace::odd(n), L = line_space();
                   Mat M = phi_basis(n), Mi = inverse(M);
                   for (int t = 0; t < trials; ++t) {
                     auto g = rng.gspin(W);
                     GaussRat c = rng.scalar();
                     GPinElement x(c_phi(g.value(), phi_embedding(n), CliffordElement::scalar(L, c), phi_prime_embedding(n)));
                     o.expect(Mi * x.pr_circ() * M == block_diag(g.pr_circ(), Mat::identity(1)), [&] {
                       return json{{"trial", t}, {"g", to_json(g.value())}, {"c", c.str()}};
                     });
                   }
                 }});

    S.push_back({"eq:std_emb_def", "i_std = C_{φ,φ'} on GSpin_2n-1", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   QuadSpace W = QuadSpace::odd(n), V = QuadSpace::even(n);
                   o.expect(i_std_value(CliffordElement::one(W)) == CliffordElement::one(V), "i_std(1) = 1");
                   o.expect(i_std_value(CliffordElement::word(W, {1, n})) == CliffordElement::word(V, {1, n + 1}),
                            "i_std(f1 f_n) = e1 e_{n+1}");
                   for (int t = 0; t < trials; ++t) {
                     auto g = rng.gspin(W), h = rng.gspin(W);
                     auto ig = i_std(g), ih = i_std(h);
                     o.expect(ig.is_even() && ig.norm() == g.norm(), "i_std preserves parity and 𝒩");
                     o.expect((g == h) == (ig == ih), "i_std injective on samples");
                   }
                 }});

    S.push_back({"eq:Elementw", "ϑ° ∈ O_2n with det −1 and ϑ°² = 1", 0,
                 [](int n, int, Rng&, Outcome& o) {
                   Mat w = vartheta_circ(n), B = QuadSpace::even(n).gram_matrix();
                   o.expect(is_orthogonal(w, B), "ϑ° orthogonal");
                   o.expect(det(w) == GaussRat(-1), "det ϑ° = −1");
                   o.expect((w * w).is_identity(), "ϑ°² = 1");
                 }});

    S.push_back({"lem:Elem_w", "θ° on T_GSO and on simple roots", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   Mat w = vartheta_circ(n);
                   for (int t = 0; t < trials; ++t) {
                     auto tt = rng.torus_coords(n);
                     auto want = tt;
                     want[n] = tt[0] / tt[n];
                     o.expect(w * gso_matrix(tt) * w == gso_matrix(want), [&] {
                       return json{{"trial", t}, {"t", coords_json(tt)}};
                     });
                   }
                   auto a = simple_roots(n);
                   for (int i = 0; i < n - 2; ++i) o.expect(theta_on_e(a[i]) == a[i], "θ°(α_i) = α_i");
                   o.expect(theta_on_e(a[n - 2]) == a[n - 1] && theta_on_e(a[n - 1]) == a[n - 2], "θ° swaps α_{n−1}, α_n");
                   auto R = roots(n);
                   for (auto& r : R) {
                     auto tr = theta_on_e(r);
                     o.expect(std::binary_search(R.begin(), R.end(), tr), "θ° preserves roots");
                   }
                 }});

    S.push_back({"eq:Elementw_spin", "ϑ = √−1(e_n − e_2n) ∈ GPin \\ GSpin", 0,
                 [](int n, int, Rng&, Outcome& o) {
                   auto t = vartheta(n);
                   o.expect(!t.is_even(), "ϑ is odd");
                   o.expect(t.value() * t.value() == CliffordElement::one(t.space()), "ϑ² = 1");
                   o.expect(t.norm() == GaussRat(1), "𝒩(ϑ) = 1");
                   o.expect(beta(t.value()) == t.value(), "β(ϑ) = ϑ");
                 }});

    S.push_back({"lem:conjugation-by-w", "pr°(ϑ) = ϑ°, ϑ centralizes i_std, θ outer involution", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   auto t = vartheta(n);
                   o.expect(t.pr_circ() == vartheta_circ(n), "pr°(ϑ) = ϑ°");
                   QuadSpace W = QuadSpace::odd(n), V = QuadSpace::even(n);
                   for (int k = 0; k < trials; ++k) {
                     auto g = rng.gspin(W);
                     auto ig = i_std(g);
                     o.expect(theta(ig) == ig, [&] {
                       return json{{"check", "ϑ centralizes i_std"}, {"trial", k}, {"g", to_json(g.value())}};
                     });
                     auto h = rng.gspin_mixed(n), h2 = rng.gspin(V);
                     o.expect(theta(theta(h)) == h, "θ² = 1");
                     o.expect(theta(h).pr_circ() == theta_circ(h.pr_circ()), "pr°∘θ = θ°∘pr°");
                     o.expect(theta(h * h2) == theta(h) * theta(h2), "θ multiplicative");
                   }
                 }});

    S.push_back({"lem:ThetaGSpin", "θ on X*(T_GSpin): swaps α_{n−1}^∨, α_n^∨, fixes the cocenter", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   auto c = simple_coroots(n);
                   for (int i = 0; i < n - 2; ++i) o.expect(theta_on_weights(c[i]) == c[i], "θ fixes α_i^∨");
                   o.expect(theta_on_weights(c[n - 2]) == c[n - 1], "θ(α_{n−1}^∨) = α_n^∨");
                   o.expect(theta_on_weights(c[n - 1]) == c[n - 2], "θ(α_n^∨) = α_{n−1}^∨");
                   WeightVector nu(n + 1, 1);
                   nu[0] = 2;
                   o.expect(theta_on_weights(nu) == nu, "θ fixes 2e0* + Σ e_i*");
                   for (int t = 0; t < trials; ++t) {
                     auto s = rng.torus_coords(n);
                     o.expect(theta_on_coords(theta_on_coords(s)) == s, "θ² = 1 on coordinates");
                     WeightVector w(n + 1);
                     for (auto& x : w) x = rng.uniform(-5, 5);
                     o.expect(theta_on_weights(theta_on_weights(w)) == w, "θ² = 1 on weights");
                     o.expect(eval_weight(theta_on_weights(w), s) == eval_weight(w, theta_on_coords(s)), [&] {
                       return json{{"check", "θ on weights is dual to θ on T_GSpin"}, {"s", coords_json(s)}, {"w", w}};
                     });
                   }
                 }});

    S.push_back({"eq:ThetaActionTGSpin", "Clifford θ on torus elements in coordinates", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   for (int t = 0; t < trials; ++t) {
                     auto te = rng.torus(n);
                     o.expect(torus_coords_of(theta(te.g)) == theta_on_coords(te.s), [&] {
                       return json{{"trial", t}, {"s", coords_json(te.s)}};
                     });
                   }
                 }});

    S.push_back({"lem:ComputeCenter", "Z(GSpin) = {s_1 = … = s_n = ±1}, θ(s0,s1) = (s0 s1, s1)", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   QuadSpace V = QuadSpace::even(n);
                   for (auto s1 : {GaussRat(1), GaussRat(-1)})
                     for (auto s0 : {GaussRat(1), GaussRat(2), GaussRat::i(), GaussRat(rat(-1, 3))}) {
                       auto z = center_element(n, s0, s1).g;
                       for (int t = 0; t < std::max(1, trials / 4); ++t) {
                         auto h = rng.gspin(V);
                         o.expect(z * h == h * z, "center commutes");
                       }
                       auto tz = torus_coords_of(theta(z));
                       o.expect(tz[0] == s0 * s1 && tz[1] == s1, "θ(s0,s1) = (s0 s1, s1)");
                     }
                   // a torus point with unequal ±1 entries is not central
                   TorusCoordinates s(n + 1, GaussRat(1));
                   s[1] = -1;
                   auto x = torus_from_coords(s).g;
                   // root unipotent 1 + e_1 e_{n+2}; x acts on its root space by s_1/s_2 = −1
                   auto g = GPinElement(CliffordElement::one(V) + CliffordElement::word(V, {1, n + 2}));
                   o.expect(x * g != g * x, "non-central torus point");
                   o.expect(center(GroupTag::GSpin, n).has_gm && center(GroupTag::GSpin, n).structure == "Gm x Z/2",
                            "Z(GSpin) ≅ Gm × {±1}");
                 }});

    S.push_back({"eq:WeylGroupAction", "Weyl group {±1}^{n,'} ⋊ S_n acting on tori and lattices", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   std::vector<int> sg(n, 1);
                   sg[0] = sg[1] = -1;
                   WeylElement a(WeylElement::identity(n).perm(), sg);
                   TorusCoordinates t0 = rng.torus_coords(n);
                   auto want = t0;
                   want[1] = t0[0] / t0[1];
                   want[2] = t0[0] / t0[2];
                   o.expect(weyl_act_gso(a, t0) == want, "a·t formula");
                   // full enumeration of W is only affordable for small n
                   auto all = n <= 6 ? WeylElement::all(n) : std::vector<WeylElement>{};
                   long expect_order = 1;
                   for (int k = 2; k <= n; ++k) expect_order *= k;
                   expect_order <<= (n - 1);
                   if (n <= 6) o.expect(static_cast<long>(all.size()) == expect_order, "|W| = 2^{n−1} n!");
                   auto R = roots(n);
                   for (int t = 0; t < trials; ++t) {
                     auto w1 = rng.weyl(n), w2 = rng.weyl(n);
                     auto s = rng.torus_coords(n);
                     o.expect(weyl_act(w1 * w2, s) == weyl_act(w1, weyl_act(w2, s)), "action on T_GSpin");
                     o.expect(weyl_act_gso(w1 * w2, s) == weyl_act_gso(w1, weyl_act_gso(w2, s)), "action on T_GSO");
                     o.expect(gso_point(weyl_act(w1, s)) == weyl_act_gso(w1, gso_point(s)), [&] {
                       return json{{"check", "pr is Weyl equivariant"}, {"s", coords_json(s)}};
                     });
                     for (auto& r : R)
                       o.expect(std::binary_search(R.begin(), R.end(), weyl_act_e(w1, r)), "W preserves roots");
                   }
                   for (Eps e : {Eps::Plus, Eps::Minus}) {
                     if (n > 6) break;
                     std::set<WeightVector> orbit;
                     for (auto& w : all) orbit.insert(weyl_act_estar(w, mu_eps(n, e)));
                     o.expect(orbit.size() == (std::size_t{1} << (n - 1)), "|W μ_ε| = 2^{n−1}");
                   }
                 }});

    S.push_back({"eq:Spin-eps-def", "μ_ε minuscule with <α_i, μ_ε> = 1 exactly at n or n−1", 0,
                 [](int n, int, Rng&, Outcome& o) {
                   int pm = n % 2 ? -1 : 1;
                   for (Eps e : {Eps::Plus, Eps::Minus}) {
                     auto mu = mu_eps(n, e);
                     auto a = simple_roots(n);
                     int target = eps_sign(e) == pm ? n : n - 1;
                     for (int i = 1; i <= n; ++i)
                       o.expect(pair_weights(a[i - 1], mu) == (i == target ? 1 : 0), "<α_i, μ_ε>");
                     for (auto& r : roots(n)) o.expect(std::labs(pair_weights(r, mu)) <= 1, "minuscule");
                   }
                 }});

    S.push_back({"def:HalfSpinDef", "spin = spin+ ⊕ spin−, dimensions 2^{n−1}, highest weight μ_ε", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   FockBasis Bs(n);
                   std::size_t h = Bs.half_dim();
                   o.expect(h == (std::size_t{1} << (n - 1)), "dim ∧±W = 2^{n−1}");
                   for (Eps e : {Eps::Plus, Eps::Minus}) {
                     auto dom = dominant_members(spin_weights(n, e));
                     o.expect(dom.size() == 1 && dom[0] == mu_eps(n, e), "highest weight = μ_ε");
                   }
                   for (int t = 0; t < trials; ++t) {
                     auto g = rng.gspin_mixed(n);
                     Mat S = spin_matrix(g).mat;
                     o.expect(S.block(0, 0, h, h) == half_spin_matrix(g, Eps::Plus).mat &&
                                  S.block(h, h, h, h) == half_spin_matrix(g, Eps::Minus).mat &&
                                  S.block(0, h, h, h).is_zero() && S.block(h, 0, h, h).is_zero(),
                              [&] { return json{{"trial", t}, {"g", to_json(g.value())}}; });
                   }
                 }});

    S.push_back({"eq:spin-highest-weights", "torus diagonal of spin^ε = {s0 ∏_U s_i}", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   for (Eps e : {Eps::Plus, Eps::Minus}) {
                     auto ws = spin_weights(n, e);
                     std::set<WeightVector> wset(ws.begin(), ws.end());
                     for (int t = 0; t < trials; ++t) {
                       auto te = rng.torus(n);
                       Mat D = half_spin_matrix(te.g, e).mat;
                       std::vector<GaussRat> want;
                       for (auto& w : ws) want.push_back(eval_weight(w, te.s));
                       o.expect(is_diagonal(D) && sorted(diagonal(D)) == sorted(want), [&] {
                         return json{{"trial", t}, {"eps", eps_str(e)}, {"s", coords_json(te.s)}};
                       });
                       auto w = rng.weyl(n);
                       bool closed = true;
                       for (auto& x : ws) closed = closed && wset.count(weyl_act_estar(w, x));
                       o.expect(closed, "weights closed under W");
                     }
                   }
                 }});

    S.push_back({"lem:spin-kernel", "ker spin^ε = {1, z_ε}, spin faithful on the center", 0,
                 [](int n, int, Rng&, Outcome& o) {
                   auto C = center(GroupTag::GSpin, n);
                   for (Eps e : {Eps::Plus, Eps::Minus}) {
                     auto [z0, z1] = z_eps(e);
                     for (auto& z : C.torsion) {
                       auto g = center_element(n, z[0], z[1]).g;
                       bool trivial = half_spin_matrix(g, e).mat.is_identity();
                       bool expected = (z[0] == GaussRat(1) && z[1] == GaussRat(1)) || (z[0] == z0 && z[1] == z1);
                       o.expect(trivial == expected, [&] {
                         return json{{"eps", eps_str(e)}, {"z", coords_json(z)}};
                       });
                     }
                   }
                   for (auto& z : C.torsion) {
                     auto g = center_element(n, z[0], z[1]).g;
                     bool id = spin_matrix(g).mat.is_identity();
                     o.expect(id == (z == C.one()), "spin faithful on the center");
                   }
                 }});

    S.push_back({"eq:CentralChar", "central character of spin^ε: ab^n or ab^{n−1}", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   for (int t = 0; t < trials; ++t) {
                     GaussRat a = rng.scalar(), b = rng.coin() ? GaussRat(1) : GaussRat(-1);
                     auto g = center_element(n, a, b).g;
                     for (Eps e : {Eps::Plus, Eps::Minus}) {
                       GaussRat c;
                       bool scalar = half_spin_matrix(g, e).mat.is_scalar(&c);
                       o.expect(scalar && c == central_char(n, e, a, b), [&] {
                         return json{{"eps", eps_str(e)}, {"a", a.str()}, {"b", b.str()}};
                       });
                     }
                   }
                 }});

    S.push_back({"eq:TGSpin-to-Gm", "𝒩 on T_GSpin is s0² s1 ⋯ sn", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   for (int t = 0; t < trials; ++t) {
                     auto te = rng.torus(n);
                     GaussRat want = te.s[0] * te.s[0];
                     for (int i = 1; i <= n; ++i) want *= te.s[i];
                     o.expect(te.g.norm() == want, [&] { return json{{"trial", t}, {"s", coords_json(te.s)}}; });
                   }
                 }});

    S.push_back({"lem:dualizing-spinor-norm-and-similitude", "𝒩∘cent is squaring; sim∘pr = 𝒩²", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   QuadSpace V = QuadSpace::even(n);
                   Mat B = V.gram_matrix();
                   for (int t = 0; t < trials; ++t) {
                     GaussRat c = rng.scalar();
                     GPinElement z(CliffordElement::scalar(V, c));
                     o.expect(z.norm() == c * c, "𝒩(c) = c²");
                     auto tz = torus_coords_of(z);
                     bool cent = tz[0] == c;
                     for (int i = 1; i <= n; ++i) cent = cent && tz[i] == GaussRat(1);
                     o.expect(cent, "cent(c) = (c, 1, …, 1)");
                     auto g = rng.gspin(V);
                     o.expect(similitude(g.pr(), B) == g.norm() * g.norm(), [&] {
                       return json{{"trial", t}, {"g", to_json(g.value())}};
                     });
                   }
                 }});

    S.push_back({"lem:spin-center2", "Z(Spin_2n) ≅ (Z/2)² or Z/4 and the θ action", 0,
                 [](int n, int, Rng&, Outcome& o) {
                   auto C = center(GroupTag::Spin, n);
                   o.expect(C.torsion.size() == 4, "|Z(Spin)| = 4");
                   for (auto& z : C.torsion) o.expect(center_element(n, z[0], z[1]).g.norm() == GaussRat(1), "𝒩 = 1");
                   GaussRat I = GaussRat::i();
                   if (n % 2 == 0) {
                     o.expect(C.structure == "(Z/2)^2", "(Z/2)² for n even");
                     auto zp = z_eps(Eps::Plus), zm = z_eps(Eps::Minus);
                     o.expect(C.theta({zp.first, zp.second}) == TorusCoordinates{zm.first, zm.second}, "θ(z+) = z−");
                   } else {
                     o.expect(C.structure == "Z/4", "Z/4 for n odd");
                     o.expect(C.generators.size() == 1 && C.generators[0] == TorusCoordinates{I, -1}, "ζ = (i, −1)");
                     o.expect(C.theta({I, -1}) == TorusCoordinates{-I, -1}, "θ(ζ) = −ζ");
                   }
                   o.expect(C.theta({-1, 1}) == TorusCoordinates{-1, 1}, "θ(−1) = −1");
                   for (auto& z : C.torsion) {
                     auto g = center_element(n, z[0], z[1]).g;
                     auto tz = torus_coords_of(theta(g));
                     o.expect(TorusCoordinates{tz[0], tz[1]} == C.theta(z), "Clifford θ matches");
                   }
                 }});

    S.push_back({"eq:daction", "contraction/wedge action of V on ∧W", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   QuadSpace V = QuadSpace::even(n);
                   std::size_t d = std::size_t{1} << n;
                   std::vector<GaussRat> v12(d);
                   v12[0b11] = 1;
                   auto r = act(CliffordElement::gen(V, n + 1), v12);
                   std::vector<GaussRat> want(d);
                   want[0b10] = 1;
                   o.expect(r == want, "e_{n+1}(e1∧e2) = e2");
                   std::vector<GaussRat> vac(d);
                   vac[0] = 1;
                   std::vector<GaussRat> e1(d);
                   e1[1] = 1;
                   o.expect(act(CliffordElement::gen(V, 1), vac) == e1, "e1·1 = e1");
                   for (Subset U = 0; U < d; ++U)
                     if (!(U >> (n - 1) & 1u)) {
                       std::vector<GaussRat> b(d);
                       b[U] = 1;
                       o.expect(act(CliffordElement::gen(V, 2 * n), b) == std::vector<GaussRat>(d), "e_2n b_U = 0");
                     }
                   // the module is a C(V)-module: v·(v·x) = Q(v) x and action is multiplicative
                   for (int t = 0; t < trials; ++t) {
                     auto x = random_element(V, rng), y = random_element(V, rng);
                     o.expect(fock_matrix_unsigned(x * y) == fock_matrix_unsigned(x) * fock_matrix_unsigned(y), [&] {
                       return json{{"trial", t}, {"x", to_json(x)}, {"y", to_json(y)}};
                     });
                   }
                 }});

    S.push_back({"eq:CliffordHalfSpinDef", "spin^± are representations of GSpin", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   QuadSpace V = QuadSpace::even(n);
                   for (Eps e : {Eps::Plus, Eps::Minus})
                     o.expect(half_spin_matrix(GPinElement(CliffordElement::one(V)), e).mat.is_identity(), "spin(1) = I");
                   for (int t = 0; t < trials; ++t) {
                     auto g = rng.gspin_mixed(n), h = rng.gspin(V);
                     for (Eps e : {Eps::Plus, Eps::Minus})
                       o.expect(half_spin_matrix(g * h, e).mat == half_spin_matrix(g, e).mat * half_spin_matrix(h, e).mat,
                                [&] { return json{{"trial", t}, {"g", to_json(g.value())}, {"h", to_json(h.value())}}; });
                     auto p = rng.gpin(V), q = rng.gpin(V);
                     o.expect(spin_matrix(p * q).mat == spin_matrix(p).mat * spin_matrix(q).mat, "spin multiplicative on GPin");
                   }
                 }});

    S.push_back({"lem:half-spin-highest-weight", "highest weight of the Clifford spin^ε is μ_ε", 0,
                 [](int n, int, Rng&, Outcome& o) {
                   // weights read off the action of a generic torus point, then the dominant one
                   std::vector<GaussRat> primes{2, 3, 5, 7, 11, 13, 17, 19, 23};
                   TorusCoordinates s(primes.begin(), primes.begin() + n + 1);
                   auto te = torus_from_coords(s);
                   FockBasis B(n);
                   for (Eps e : {Eps::Plus, Eps::Minus}) {
                     Mat D = half_spin_matrix(te.g, e).mat;
                     std::vector<WeightVector> ws;
                     for (std::size_t k = 0; k < D.rows(); ++k) {
                       WeightVector w(n + 1, 0);
                       w[0] = 1;
                       for (int i : subset_elements(B.half(e)[k])) w[i] = 1;
                       o.expect(D(k, k) == eval_weight(w, s), "eigenvalue of b_U");
                       ws.push_back(w);
                     }
                     auto dom = dominant_members(ws);
                     o.expect(dom.size() == 1 && dom[0] == mu_eps(n, e), "dominant weight = μ_ε");
                   }
                 }});

    S.push_back({"lem:spin-inv-pairing", "((·,·)) symmetry type and half restrictions", 0,
                 [](int n, int, Rng&, Outcome& o) {
                   Mat J = pairing_gram(n);
                   bool alt = n % 4 == 2 || n % 4 == 3;
                   o.expect(alt ? J.transpose() == GaussRat(-1) * J : J.transpose() == J, "symmetry type");
                   o.expect(pairing_unsigned(n, 0, (1u << n) - 1) == GaussRat(1), "((1, e1∧…∧en)) = 1");
                   o.expect(rank(J) == J.rows(), "nondegenerate");
                   std::size_t h = std::size_t{1} << (n - 1);
                   Mat Jp = J.block(0, 0, h, h), Jm = J.block(h, h, h, h);
                   if (n % 2)
                     o.expect(Jp.is_zero() && Jm.is_zero(), "half restrictions vanish for n odd");
                   else
                     o.expect(rank(Jp) == h && rank(Jm) == h, "half restrictions nondegenerate for n even");
                 }});

    S.push_back({"lem:Duality-Eq1", "spin(g)ᵀ J spin(g) = 𝒩(g) J", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   QuadSpace V = QuadSpace::even(n);
                   Mat J = pairing_gram(n);
                   for (int t = 0; t < trials; ++t) {
                     auto g = t % 2 ? rng.gpin(V) : rng.gspin_mixed(n);
                     Mat S = spin_matrix(g).mat;
                     o.expect(S.transpose() * J * S == g.norm() * J, [&] {
                       return json{{"trial", t}, {"g", to_json(g.value())}};
                     });
                   }
                 }});

    S.push_back({"lem:CliffordSpinRestrict", "i_std(g) ψ(w) = ψ(g w)", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   QuadSpace W = QuadSpace::odd(n);
                   Mat P = psi_matrix(n);
                   o.expect(rank(P) == P.rows(), "ψ invertible");
                   for (int t = 0; t < trials; ++t) {
                     auto g = rng.gspin(W);
                     o.expect(half_spin_matrix(i_std(g), Eps::Plus).mat * P == P * spin_matrix(g).mat, [&] {
                       return json{{"trial", t}, {"g", to_json(g.value())}};
                     });
                   }
                 }});

    S.push_back({"lem:CliffordSpinThetaAction", "ϑ(spin+(g) x) = spin−(θ g) ϑ x", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   Mat T = theta_intertwiner(n);
                   o.expect(rank(T) == T.rows(), "x ↦ ϑx invertible");
                   for (int t = 0; t < trials; ++t) {
                     auto g = rng.gspin_mixed(n);
                     o.expect(T * half_spin_matrix(g, Eps::Plus).mat == half_spin_matrix(theta(g), Eps::Minus).mat * T, [&] {
                       return json{{"trial", t}, {"g", to_json(g.value())}};
                     });
                   }
                 }});

    S.push_back({"eq:CliffordExplicitBasis", "basis b_U and the ϑ-matched orderings", 0,
                 [](int n, int, Rng&, Outcome& o) {
                   FockBasis B(n);
                   o.expect(B.even.size() == B.odd.size(), "equal halves");
                   Mat T = theta_intertwiner(n);
                   GaussRat c;
                   o.expect(T.is_scalar(&c) && (c == GaussRat::i() || c == -GaussRat::i()),
                            "ϑ b_U / √−1 = ± b_{U'} with matched order");
                   for (std::size_t k = 0; k < B.even.size(); ++k)
                     o.expect((B.even[k] ^ B.odd[k]) == (1u << (n - 1)), "U' = U Δ {n}");
                 }});

    S.push_back({"prop:res-of-spin", "spin±∘i_std = ψ spin ψ⁻¹ and its ϑ-conjugate", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   QuadSpace W = QuadSpace::odd(n);
                   Mat P = psi_matrix(n), Pi = inverse(P), T = theta_intertwiner(n), Ti = inverse(T);
                   for (int t = 0; t < trials; ++t) {
                     auto g = rng.gspin(W);
                     auto ig = i_std(g);
                     Mat sp = half_spin_matrix(ig, Eps::Plus).mat;
                     o.expect(sp == P * spin_matrix(g).mat * Pi && half_spin_matrix(ig, Eps::Minus).mat == T * sp * Ti,
                              [&] { return json{{"trial", t}, {"g", to_json(g.value())}}; });
                   }
                 }});

    S.push_back({"lem:GSORoots", "roots, coroots, simple roots of GSO_2n", 0,
                 [](int n, int, Rng&, Outcome& o) {
                   auto R = roots(n), C = coroots(n);
                   o.expect(static_cast<int>(R.size()) == 2 * n * (n - 1), "|Φ| = 2n(n−1)");
                   auto a = simple_roots(n), c = simple_coroots(n);
                   for (int i = 0; i < n; ++i)
                     for (int j = 0; j < n; ++j) {
                       long v = pair_weights(a[i], c[j]);
                       // Cartan matrix of D_n
                       long want = i == j ? 2 : 0;
                       if (i != j) {
                         bool adj = (std::abs(i - j) == 1 && std::max(i, j) < n - 1) ||
                                    ((i == n - 1 || j == n - 1) && std::min(i, j) == n - 3);
                         if (adj) want = -1;
                       }
                       o.expect(v == want, "Cartan matrix");
                     }
                   for (auto& r : R) o.expect(pair_weights(r, coroot_of(r)) == 2, "<α, α^∨> = 2");
                   o.expect(gspin_simple_roots(n) == c, "GSpin simple roots = GSO simple coroots");
                   for (auto& r : R) {
                     WeightVector neg = r;
                     for (auto& x : neg) x = -x;
                     o.expect(std::binary_search(R.begin(), R.end(), neg), "Φ = −Φ");
                   }
                   o.expect(C.size() == R.size(), "|Φ^∨| = |Φ|");
                 }});

    S.push_back({"lem:spin7", "Spin_7 weight discriminator for spin° vs θ°spin°", 4,
                 [](int, int trials, Rng& rng, Outcome& o) {
                   o.expect(spin7_orbit_discriminator(0, 0, 0), "(0,0,0) conjugate");
                   o.expect(!spin7_orbit_discriminator(2, 0, 0), "(2,0,0) not conjugate");
                   o.expect(!spin7_orbit_discriminator(8, 4, 2), "(8,4,2) not conjugate");
                   for (int t = 0; t < trials; ++t) {
                     long a1 = rng.uniform(-9, 9), a2 = rng.uniform(-9, 9), a3 = rng.uniform(-9, 9);
                     if ((a1 + a2 + a3) % 2) a3 += 1;
                     auto b = spin7_image(a1, a2, a3);
                     bool nonzero = std::all_of(b.begin(), b.end(), [](long x) { return x != 0; });
                     // coincident orbits iff some (a1±a2±a3)/2 vanishes
                     o.expect(spin7_orbit_discriminator(a1, a2, a3) == !nonzero, [&] {
                       return json{{"a", {a1, a2, a3}}};
                     });
                   }
                 }});

    S.push_back({"lem:IrreducibilityOfSpin-", "spin^ε∘spin° on T_Spin7: std⊕1 for +, spin° for −", 4,
                 [](int, int trials, Rng& rng, Outcome& o) {
                   for (int t = 0; t < trials; ++t) {
                     long a1 = rng.uniform(-9, 9), a2 = rng.uniform(-9, 9), a3 = rng.uniform(-9, 9);
                     if ((a1 + a2 + a3) % 2) a3 += 1;
                     auto p = spin_minus_irreducibility_weight_check(4, Eps::Plus, a1, a2, a3);
                     auto m = spin_minus_irreducibility_weight_check(4, Eps::Minus, a1, a2, a3);
                     o.expect(p.matches_std_plus_one && m.matches_spin_circ, [&] { return json{{"a", {a1, a2, a3}}}; });
                   }
                 }});

    S.push_back({"lem:GPin-conjugacy", "fingerprints decide semisimple conjugacy", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   QuadSpace V = QuadSpace::even(n);
                   for (int t = 0; t < trials; ++t) {
                     auto g = rng.torus(n);
                     auto p = rng.gspin(V);
                     auto h = p * g.g * p.inverse();
                     o.expect(is_conjugate_gspin(g.g, h), [&] {
                       return json{{"check", "inner invariance"}, {"s", coords_json(g.s)}, {"p", to_json(p.value())}};
                     });
                     auto w = rng.weyl(n);
                     auto gw = torus_from_coords(weyl_act(w, g.s));
                     o.expect(is_conjugate_gspin(g.g, gw.g), "Weyl-related torus points are conjugate");
                     o.expect(is_conjugate_gpin(g.g, theta(g.g)), "g ~ θ(g) in GPin");
                     auto vt = vartheta(n);
                     o.expect(fingerprint(vt * g.g * vt.inverse()) == fingerprint(theta(g.g)), "ϑ-conjugation");
                     // θ-conjugate is inner iff the coordinates are Weyl-related to their θ-image
                     if (n > 5) continue;
                     bool weyl_rel = false;
                     auto ts = theta_on_coords(g.s);
                     for (auto& u : WeylElement::all(n))
                       if (weyl_act(u, g.s) == ts) weyl_rel = true;
                     o.expect(is_conjugate_gspin(g.g, theta(g.g)) == weyl_rel, [&] {
                       return json{{"check", "inner vs outer"}, {"s", coords_json(g.s)}};
                     });
                   }
                 }});

    S.push_back({"prop:containingRegularUnipotent", "regular unipotents of SO_2n from i_std°", 0,
                 [](int n, int, Rng&, Outcome& o) {
                   Mat E = principal_nilpotent(n);
                   Mat u = exp_nilpotent(E);
                   o.expect(is_regular_unipotent_so(u), "exp(E) regular unipotent");
                   o.expect(E.pow(2 * n - 1).is_zero() && !E.pow(2 * n - 2).is_zero(), "nilpotency order");
                   Mat M = phi_basis(n), Mi = inverse(M);
                   Mat blk = Mi * u * M;
                   bool shape = true;
                   for (int k = 0; k < 2 * n - 1; ++k)
                     shape = shape && blk(2 * n - 1, k).is_zero() && blk(k, 2 * n - 1).is_zero();
                   o.expect(shape && blk(2 * n - 1, 2 * n - 1) == GaussRat(1), "u ∈ i_std°(SO_2n−1)");
                   o.expect(!is_regular_unipotent_so(root_unipotent(n)), "root unipotent is not regular");
                   o.expect(!is_regular_unipotent_so(Mat::identity(2 * n)), "identity is not regular");
                 }});

    S.push_back({"eq:HTweights", "Hodge–Tate multiset vs spin-weight pairing", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   for (Eps e : {Eps::Plus, Eps::Minus}) {
                     for (int t = 0; t < trials; ++t) {
                       HighestWeight lam(rng.dominant(n));
                       long mult = rng.uniform(1, 3);
                       o.expect(ht_multiset(n, e, lam, mult) == ht_via_spin_weights(n, e, lam, mult), [&] {
                         return json{{"eps", eps_str(e)}, {"lambda", lam.a}, {"mult", mult}};
                       });
                     }
                   }
                   if (n == 3) {
                     HighestWeight z(WeightVector(4, 0));
                     for (Eps e : {Eps::Plus, Eps::Minus})
                       o.expect(ht_multiset(3, e, z, 1).values == std::vector<long>{0, 1, 2, 3}, "λ = 0, n = 3");
                   }
                 }});

    S.push_back({"prop:HT-weights", "𝒫^ε(n), the b-shift and the θ swap of ε", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   auto pp = p_eps(n, Eps::Plus), pm = p_eps(n, Eps::Minus);
                   o.expect(pp.size() == (std::size_t{1} << (n - 1)) && pm.size() == pp.size(), "|𝒫^ε| = 2^{n−1}");
                   std::set<Subset> all(pp.begin(), pp.end());
                   all.insert(pm.begin(), pm.end());
                   o.expect(all.size() == (std::size_t{1} << n), "𝒫^+ ⊔ 𝒫^− = all subsets");
                   for (int t = 0; t < trials; ++t) {
                     HighestWeight lam(rng.dominant(n));
                     auto hp = ht_multiset(n, Eps::Plus, lam, 1), hm = ht_multiset(n, Eps::Minus, lam, 1);
                     o.expect(hp.values.size() + hm.values.size() == (std::size_t{1} << n), "2^n weights");
                     // the union over ε is the full set {−a_0 + Σ_i (a_i or n−i)} up to the sign of a_i
                     std::vector<long> all_v;
                     for (Subset I = 0; I < (1u << n); ++I) {
                       long v = -lam.a[0];
                       for (int i = 1; i <= n; ++i) v += (I >> (i - 1) & 1u) ? -lam.a[i] : n - i;
                       all_v.push_back(v);
                     }
                     std::vector<long> u = hp.values;
                     u.insert(u.end(), hm.values.begin(), hm.values.end());
                     std::sort(u.begin(), u.end());
                     std::sort(all_v.begin(), all_v.end());
                     o.expect(u == all_v, [&] { return json{{"lambda", lam.a}}; });
                     auto h2 = ht_multiset(n, Eps::Plus, lam, 2);
                     std::vector<long> twice;
                     for (long v : hp.values) twice.insert(twice.end(), {v, v});
                     o.expect(h2.values == twice && h2.multiplicity == 2, "multiplicity scales");
                   }
                 }});

    S.push_back({"std-reg", "(std-reg): {±b_i} pairwise distinct", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   for (int t = 0; t < trials; ++t) {
                     HighestWeight lam(rng.dominant(n));
                     auto b = b_shift(lam);
                     std::vector<long> v;
                     for (int i = 1; i <= n; ++i) {
                       v.push_back(b[i]);
                       v.push_back(-b[i]);
                     }
                     o.expect(is_std_regular(lam) == all_distinct(v), "definition");
                     // b_1 > … > b_{n−1} > |b_n|, so std-reg ⟺ a_n ≠ 0
                     o.expect(is_std_regular(lam) == (lam.a[n] != 0), [&] { return json{{"lambda", lam.a}}; });
                   }
                 }});

    S.push_back({"spin-reg", "(spin-reg) implies (std-reg) when a_n ≠ 0", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   for (int t = 0; t < trials; ++t) {
                     HighestWeight lam(rng.dominant(n));
                     if (lam.a[n] == 0) continue;
                     o.expect(!is_spin_regular(lam) || is_std_regular(lam), [&] { return json{{"lambda", lam.a}}; });
                   }
                   // examples
                   if (n == 3) {
                     o.expect(!is_std_regular(HighestWeight({0, 3, 1, 0})), "(0,3,1,0) not std-regular");
                     o.expect(is_std_regular(HighestWeight({0, 3, 2, 1})), "(0,3,2,1) std-regular");
                   }
                 }});

    S.push_back({"lem:extend", "extension criterion gθ(g) = 1 and the conjugation relation", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   CliffordGroupModel M{n};
                   QuadSpace V = QuadSpace::even(n);
                   for (int t = 0; t < std::max(1, trials / 4); ++t) {
                     auto x = rng.gspin(V);
                     auto g0 = x * theta(x).inverse();
                     GeneratorTable<CliffordGroupModel> tab;
                     for (int k = 0; k < 2; ++k) {
                       auto h = rng.gspin(V);
                       tab.emplace_back(h, g0 * theta(h) * g0.inverse());
                     }
                     o.expect(check_extension_criterion(M, tab, g0), [&] {
                       return json{{"trial", t}, {"x", to_json(x.value())}};
                     });
                     auto bad = M.lift({GaussRat(2), GaussRat(1)});
                     o.expect(!check_extension_criterion(M, tab, g0 * bad), "non-cocycle twist fails");
                     auto tab2 = tab;
                     tab2[0].second = tab2[0].first;
                     o.expect(!check_extension_criterion(M, tab2, g0) || tab2[0].second == tab[0].second,
                              "wrong relation fails");
                   }
                   GeneratorTable<CliffordGroupModel> triv{{GPinElement(CliffordElement::one(V)), GPinElement(CliffordElement::one(V))}};
                   o.expect(check_extension_criterion(M, triv, GPinElement(CliffordElement::one(V))), "trivial data");
                 }});

    S.push_back({"lem:uniquely-extend", "extensions form an H¹-torsor", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   auto H = z1_b1_h1(InvolutionModule::from_center(center(GroupTag::GSpin, n)));
                   CliffordGroupModel M{n};
                   QuadSpace V = QuadSpace::even(n);
                   for (int t = 0; t < std::max(1, trials / 4); ++t) {
                     auto x = rng.gspin(V);
                     auto g0 = x * theta(x).inverse();
                     GeneratorTable<CliffordGroupModel> tab;
                     auto h = rng.gspin(V);
                     tab.emplace_back(h, g0 * theta(h) * g0.inverse());
                     auto cls = extension_classes(M, tab, g0, H);
                     o.expect(cls.size() == H.h1_reps.size(), "one extension per class");
                     for (auto& z : H.z1)
                       o.expect(check_extension_criterion(M, tab, g0 * M.lift(z)), "cocycle twists pass");
                     for (auto& b : H.b1)
                       o.expect(check_extension_criterion(M, tab, g0 * M.lift(b)), "coboundary twists pass");
                     auto C = center(GroupTag::GSpin, n);
                     for (auto& z : C.torsion) {
                       bool passes = check_extension_criterion(M, tab, g0 * M.lift(z));
                       o.expect(passes == is_cocycle(InvolutionModule::from_center(C), z), [&] {
                         return json{{"z", coords_json(z)}};
                       });
                     }
                   }
                 }});

    S.push_back({"ex:SO2n-extend", "Z(SO_2n) = {±1}: H¹ ≅ Z/2", 0,
                 [](int n, int trials, Rng& rng, Outcome& o) {
                   auto H = z1_b1_h1(InvolutionModule::from_center(center(GroupTag::SO, n)));
                   o.expect(H.z1.size() == 2 && H.b1.size() == 1 && H.structure == "Z/2", "H¹ ≅ Z/2");
                   SOMatrixModel M{n};
                   QuadSpace V = QuadSpace::even(n);
                   for (int t = 0; t < std::max(1, trials / 4); ++t) {
                     Mat x = rng.gspin(V).pr_circ();
                     Mat g0 = x * inverse(theta_circ(x));
                     Mat h = rng.gspin(V).pr_circ();
                     GeneratorTable<SOMatrixModel> tab{{h, g0 * theta_circ(h) * inverse(g0)}};
                     auto cls = extension_classes(M, tab, g0, H);
                     o.expect(cls.size() == 2 && cls[1] == GaussRat(-1) * cls[0], "two classes differing by −1");
                   }
                 }});

    S.push_back({"ex:GSpin2n-extend", "Z(GSpin_2n): Z¹ ≅ μ4, B¹ ≅ μ2, H¹ ≅ Z/2 with ζ = (i, −1)", 0,
                 [](int n, int, Rng&, Outcome& o) {
                   auto H = z1_b1_h1(InvolutionModule::from_center(center(GroupTag::GSpin, n)));
                   GaussRat I = GaussRat::i();
                   o.expect(H.z1.size() == 4 && H.b1.size() == 2 && H.structure == "Z/2", "orders");
                   for (auto& z : H.z1) o.expect(z[1] == z[0] * z[0] || z[1] == (z[0] * z[0]).inv(), "Z¹ = {(s0, s0^{-2})}");
                   o.expect(H.h1_reps.size() == 2 && (H.h1_reps[1] == TorusCoordinates{I, -1} ||
                                                      H.h1_reps[1] == TorusCoordinates{-I, -1}),
                            "nontrivial class (±i, −1)");
                   auto T = z1_b1_h1(InvolutionModule::trivial());
                   o.expect(T.h1_reps.size() == 1 && T.structure == "1", "trivial module");
                 }});

    std::sort(S.begin(), S.end(), [](const Suite& a, const Suite& b) { return a.key < b.key; });
    return S;
  }();
  return suites;
}

// Keys of every lemma/equation that the verifier is required to cover.
inline const std::vector<std::string>& in_scope_keys() {
  static const std::vector<std::string> keys = {
      "lem:GSORoots", "lem:Elem_w", "lem:ThetaGSpin", "eq:ThetaActionTGSpin", "lem:ComputeCenter",
      "eq:WeylGroupAction", "eq:Spin-eps-def", "def:HalfSpinDef", "eq:spin-highest-weights", "lem:spin-kernel",
      "eq:CentralChar", "eq:StdQuadSpace", "eq:betaInvolution", "lem:SurjectionOntoGSO", "lem:CliffordMapping",
      "lem:CliffordMapping2", "eq:std_emb_def", "eq:Elementw", "eq:Elementw_spin", "lem:conjugation-by-w",
      "lem:dualizing-spinor-norm-and-similitude", "eq:TGSpin-to-Gm", "lem:spin-center2", "eq:daction",
      "eq:CliffordHalfSpinDef", "lem:half-spin-highest-weight", "lem:spin-inv-pairing", "lem:Duality-Eq1",
      "lem:CliffordSpinRestrict", "lem:CliffordSpinThetaAction", "eq:CliffordExplicitBasis", "prop:res-of-spin",
      "lem:spin7", "lem:IrreducibilityOfSpin-", "lem:GPin-conjugacy", "prop:containingRegularUnipotent",
      "prop:HT-weights", "eq:HTweights", "std-reg", "spin-reg", "lem:extend", "lem:uniquely-extend",
      "ex:SO2n-extend", "ex:GSpin2n-extend"};
  return keys;
}

inline const Suite* find_suite(const std::string& key) {
  for (auto& s : suite_registry())
    if (s.key == key) return &s;
  return nullptr;
}

struct VerifyOptions {
  std::vector<std::string> suites;  // empty = all
  int n_lo = 3, n_hi = 5;
  int trials = 10;
  std::uint64_t seed = 0;
  bool timing = false;
};

struct VerifyResult {
  json report;
  bool all_pass = true;
};

inline json run_one(const Suite& s, int n, const VerifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Rng rng = Rng::derive(opt.seed, s.key, n);
  Outcome out;
  try {
    s.run(n, opt.trials, rng, out);
  } catch (const std::exception& e) {
    if (out.pass) {
      out.pass = false;
      out.counterexample = json{{"exception", e.what()}};
    }
  }
  json rec = {{"suite", s.key}, {"title", s.title}, {"n", n},     {"trials", opt.trials},
              {"seed", opt.seed}, {"status", out.pass ? "pass" : "fail"}, {"checks", out.checks}};
  if (!out.pass) {
    out.counterexample["replay"] = "verify --suites " + s.key + " --n " + std::to_string(n) + " --trials " +
                                   std::to_string(opt.trials) + " --seed " + std::to_string(opt.seed);
    rec["counterexample"] = out.counterexample;
  }
  if (opt.timing)
    rec["wall_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

inline VerifyResult run_verify(const VerifyOptions& opt) {
  std::vector<const Suite*> chosen;
  if (opt.suites.empty()) {
    for (auto& s : suite_registry()) chosen.push_back(&s);
  } else {
    for (auto& k : opt.suites) {
      const Suite* s = find_suite(k);
      if (!s) throw std::invalid_argument("unknown suite: " + k);
      if (std::find(chosen.begin(), chosen.end(), s) == chosen.end()) chosen.push_back(s);
    }
  }
  std::vector<std::pair<const Suite*, int>> jobs;
  for (auto* s : chosen) {
    if (s->fixed_n)
      jobs.emplace_back(s, s->fixed_n);
    else
      for (int n = opt.n_lo; n <= opt.n_hi; ++n) jobs.emplace_back(s, n);
  }
  // fixed pool: thread_local product caches are reused across jobs on a worker
  std::vector<json> recs(jobs.size());
  std::atomic<std::size_t> next{0};
  unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), jobs.size()));
  std::vector<std::future<void>> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.push_back(std::async(std::launch::async, [&] {
      for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();) recs[k] = run_one(*jobs[k].first, jobs[k].second, opt);
    }));
  for (auto& f : pool) f.get();
  std::sort(recs.begin(), recs.end(), [](const json& a, const json& b) {
    if (a["suite"] != b["suite"]) return a["suite"].get<std::string>() < b["suite"].get<std::string>();
    return a["n"].get<int>() < b["n"].get<int>();
  });
  VerifyResult r;
  long passed = 0, failed = 0;
  for (auto& rec : recs) (rec["status"] == "pass" ? passed : failed)++;
  r.all_pass = failed == 0;
  r.report = {{"tool", "spinlab"},
              {"version", kVersion},
              {"seed", opt.seed},
              {"trials", opt.trials},
              {"n_range", {opt.n_lo, opt.n_hi}},
              {"suites", recs},
              {"summary", {{"total", passed + failed}, {"passed", passed}, {"failed", failed}}},
              {"status", r.all_pass ? "pass" : "fail"}};
  return r;
}

}  // namespace spinlab
