// Acceptance runner: one PASS/FAIL line per criterion.
// usage: acceptance [N|all]

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "spinlab/cocycle.hpp"
#include "spinlab/conjtest.hpp"
#include "spinlab/hodge.hpp"
#include "spinlab/json_io.hpp"
#include "spinlab/sampling.hpp"
#include "spinlab/verify.hpp"

using namespace spinlab;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Verdict {
  bool pass = true;
  long checks = 0, failures = 0;
  std::string detail;

  // keep the first few failures, count the rest
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (++failures <= 3) detail += (detail.empty() ? "" : "; ") + what;
    pass = false;
  }
};

std::string coords_str(const TorusCoordinates& s) {
  std::string r = "(";
  for (std::size_t k = 0; k < s.size(); ++k) r += (k ? "," : "") + s[k].str();
  return r + ")";
}

std::string weight_str(const WeightVector& w) {
  std::string r = "(";
  for (std::size_t k = 0; k < w.size(); ++k) r += (k ? "," : "") + std::to_string(w[k]);
  return r + ")";
}

std::vector<GaussRat> sorted_diag(const Mat& m) {
  std::vector<GaussRat> d;
  for (std::size_t k = 0; k < m.rows(); ++k) d.push_back(m(k, k));
  std::sort(d.begin(), d.end(), [](const GaussRat& a, const GaussRat& b) { return a.str() < b.str(); });
  return d;
}

Verdict c1() {
  Verdict v;
  for (int n = 3; n <= 6; ++n) {
    QuadSpace V = QuadSpace::even(n);
    Rng rng = Rng::derive(kSeed, "c1", n);
    for (int t = 0; t < 100; ++t) {
      auto a = rng.vector(V), b = rng.vector(V);
      auto ca = CliffordElement::vector(V, a), cb = CliffordElement::vector(V, b);
      v.expect(ca * cb + cb * ca == CliffordElement::scalar(V, V.pairing(a, b)),
               "vw+wv != <v,w> at n=" + std::to_string(n));
      auto x = ca * cb + CliffordElement::scalar(V, rng.scalar()) * ca;
      auto y = cb * ca * cb;
      v.expect(beta(x * y) == beta(y) * beta(x) && beta(beta(x)) == x && beta(ca) == ca,
               "β not an anti-involution at n=" + std::to_string(n));
    }
  }
  return v;
}

Verdict c2() {
  Verdict v;
  for (int n = 3; n <= 6; ++n) {
    QuadSpace V = QuadSpace::even(n);
    Mat B = V.gram_matrix();
    Rng rng = Rng::derive(kSeed, "c2", n);
    for (int t = 0; t < 50; ++t) {
      auto g = rng.gspin(V), h = t % 2 ? rng.gspin(V) : rng.gspin_mixed(n);
      auto gh = g * h;
      std::string at = " at n=" + std::to_string(n) + " trial " + std::to_string(t);
      v.expect(gh.pr_circ() == g.pr_circ() * h.pr_circ(), "pr° not multiplicative" + at);
      v.expect(gh.pr() == g.pr() * h.pr(), "pr not multiplicative" + at);
      v.expect(gh.norm() == g.norm() * h.norm(), "𝒩 not multiplicative" + at);
      v.expect(g.pr() == g.norm() * g.pr_circ(), "pr != 𝒩·pr°" + at);
      v.expect(similitude(g.pr(), B) == g.norm() * g.norm(), "sim∘pr != 𝒩²" + at);
    }
  }
  return v;
}

Verdict c3() {
  Verdict v;
  for (int n = 3; n <= 6; ++n) {
    QuadSpace V = QuadSpace::even(n), W = QuadSpace::odd(n);
    auto t = vartheta(n);
    v.expect(t.value() * t.value() == CliffordElement::one(V), "ϑ² != 1 at n=" + std::to_string(n));
    v.expect(t.pr_circ() == vartheta_circ(n), "pr°(ϑ) != ϑ° at n=" + std::to_string(n));
    Rng rng = Rng::derive(kSeed, "c3", n);
    for (int k = 0; k < 50; ++k) {
      auto g = i_std(rng.gspin(W));
      v.expect(t * g * t.inverse() == g, "ϑ does not centralize i_std at n=" + std::to_string(n));
    }
  }
  return v;
}

Verdict c4() {
  Verdict v;
  for (int n = 3; n <= 6; ++n) {
    Rng rng = Rng::derive(kSeed, "c4", n);
    for (int t = 0; t < 100; ++t) {
      auto te = rng.torus(n);
      v.expect(torus_coords_of(theta(te.g)) == theta_on_coords(te.s), "θ mismatch at " + coords_str(te.s));
      GaussRat N = te.s[0] * te.s[0];
      for (int i = 1; i <= n; ++i) N *= te.s[i];
      v.expect(te.g.norm() == N, "𝒩 mismatch at " + coords_str(te.s));
    }
  }
  return v;
}

Verdict c5() {
  Verdict v;
  for (int n = 3; n <= 6; ++n) {
    Rng rng = Rng::derive(kSeed, "c5", n);
    for (Eps e : {Eps::Plus, Eps::Minus}) {
      auto ws = spin_weights(n, e);
      v.expect(ws.size() == (std::size_t{1} << (n - 1)), "dim != 2^{n-1}");
      auto dom = dominant_members(ws);
      v.expect(dom.size() == 1 && dom[0] == mu_eps(n, e), "highest weight != μ_ε at n=" + std::to_string(n));
      for (int t = 0; t < 10; ++t) {
        auto te = rng.torus(n);
        Mat D = half_spin_matrix(te.g, e).mat;
        v.expect(D.rows() == ws.size(), "half-spin dimension");
        std::vector<GaussRat> want;
        for (auto& w : ws) want.push_back(eval_weight(w, te.s));
        std::sort(want.begin(), want.end(), [](const GaussRat& a, const GaussRat& b) { return a.str() < b.str(); });
        bool diag = true;
        for (std::size_t r = 0; r < D.rows(); ++r)
          for (std::size_t c = 0; c < D.cols(); ++c) diag = diag && (r == c || D(r, c).is_zero());
        v.expect(diag && sorted_diag(D) == want, "weights mismatch at " + coords_str(te.s) + " ε=" + eps_str(e));
      }
    }
  }
  return v;
}

Verdict c6() {
  Verdict v;
  for (int n = 3; n <= 6; ++n) {
    auto C = center(GroupTag::GSpin, n);
    for (Eps e : {Eps::Plus, Eps::Minus}) {
      auto [z0, z1] = z_eps(e);
      for (auto& z : C.torsion) {
        bool trivial = half_spin_matrix(center_element(n, z[0], z[1]).g, e).mat.is_identity();
        bool want = z == C.one() || (z[0] == z0 && z[1] == z1);
        v.expect(trivial == want, "ker spin^" + eps_str(e) + " wrong at " + coords_str(z));
      }
    }
    auto S = center(GroupTag::Spin, n);
    std::map<int, int> orders;
    for (auto& z : S.torsion) ++orders[element_order(center_element(n, z[0], z[1]).g)];
    bool klein = orders == std::map<int, int>{{1, 1}, {2, 3}};
    bool cyclic = orders == std::map<int, int>{{1, 1}, {2, 1}, {4, 2}};
    v.expect(S.torsion.size() == 4 && (n % 2 ? cyclic : klein), "Z(Spin) order profile wrong at n=" + std::to_string(n));
    v.expect(S.structure == (n % 2 ? "Z/4" : "(Z/2)^2"), "Z(Spin) structure label wrong at n=" + std::to_string(n));
  }
  return v;
}

Verdict c7() {
  Verdict v;
  for (int n = 3; n <= 6; ++n) {
    QuadSpace V = QuadSpace::even(n);
    Mat J = pairing_gram(n);
    bool alt = n == 3 || n == 6;
    v.expect(alt ? J.transpose() == GaussRat(-1) * J : J.transpose() == J, "symmetry type at n=" + std::to_string(n));
    std::size_t h = std::size_t{1} << (n - 1);
    Mat Jp = J.block(0, 0, h, h), Jm = J.block(h, h, h, h);
    if (n % 2)
      v.expect(Jp.is_zero() && Jm.is_zero(), "half restrictions nonzero at n=" + std::to_string(n));
    else
      v.expect(rank(Jp) == h && rank(Jm) == h, "half restrictions degenerate at n=" + std::to_string(n));
    Rng rng = Rng::derive(kSeed, "c7", n);
    for (int t = 0; t < 50; ++t) {
      auto g = t % 2 ? rng.gpin(V) : rng.gspin_mixed(n);
      Mat S = spin_matrix(g).mat;
      v.expect(S.transpose() * J * S == g.norm() * J, "Gram invariance fails at n=" + std::to_string(n));
    }
  }
  return v;
}

Verdict c8() {
  Verdict v;
  for (int n = 3; n <= 5; ++n) {
    QuadSpace W = QuadSpace::odd(n);
    Mat P = psi_matrix(n), Pi = inverse(P), T = theta_intertwiner(n), Ti = inverse(T);
    Rng rng = Rng::derive(kSeed, "c8", n);
    for (int t = 0; t < 50; ++t) {
      auto g = rng.gspin(W);
      auto ig = i_std(g);
      Mat sp = half_spin_matrix(ig, Eps::Plus).mat;
      v.expect(sp == P * spin_matrix(g).mat * Pi, "spin+∘i_std != ψ spin ψ⁻¹ at n=" + std::to_string(n));
      v.expect(half_spin_matrix(ig, Eps::Minus).mat == T * sp * Ti, "spin−∘i_std mismatch at n=" + std::to_string(n));
    }
  }
  return v;
}

Verdict c9() {
  Verdict v;
  for (int n = 3; n <= 6; ++n) {
    auto part = jordan_partition(exp_nilpotent(principal_nilpotent(n)));
    v.expect(part == std::vector<int>{2 * n - 1, 1}, "Jordan type wrong at n=" + std::to_string(n));
  }
  return v;
}

Verdict c10() {
  Verdict v;
  v.expect(!spin7_orbit_discriminator(6, 4, 2),
           "(6,4,2): b = " + weight_str({6, 4, 2, 0}) + " has b_4 = 0, so the discriminator reports conjugate");
  v.expect(spin7_orbit_discriminator(2, 0, 0),
           "(2,0,0): b = " + weight_str({1, 1, 1, 1}) + " has no zero entry, so the discriminator reports non-conjugate");
  v.expect(spin7_orbit_discriminator(0, 0, 0), "(0,0,0) reported non-conjugate");
  Rng rng = Rng::derive(kSeed, "c10", 4);
  for (int t = 0; t < 200; ++t) {
    long a1 = rng.uniform(-9, 9), a2 = rng.uniform(-9, 9), a3 = rng.uniform(-9, 9);
    if ((a1 + a2 + a3) % 2) a3 += 1;
    auto p = spin_minus_irreducibility_weight_check(4, Eps::Plus, a1, a2, a3);
    auto m = spin_minus_irreducibility_weight_check(4, Eps::Minus, a1, a2, a3);
    v.expect(p.matches_std_plus_one && m.matches_spin_circ,
             "weight multisets mismatch at " + weight_str({a1, a2, a3}));
  }
  return v;
}

std::string fingerprint_key(const Fingerprint& f) {
  std::ostringstream os;
  os << f.parity << '|' << f.norm.str();
  for (const Poly* p : {&f.cp_std, &f.cp_spin_plus, &f.cp_spin_minus, &f.cp_spin_full}) {
    os << '|';
    for (auto& c : p->coeffs()) os << c.str() << ',';
  }
  return os.str();
}

std::vector<std::string> coords_key(const TorusCoordinates& s) {
  std::vector<std::string> k;
  for (auto& x : s) k.push_back(x.str());
  return k;
}

Verdict c11() {
  Verdict v;
  // n = 3: every (s0, s1, s2, s3) over a small grid
  int n = 3;
  std::vector<GaussRat> vals{1, -1, 2, GaussRat(rat(1, 2)), -2};
  auto W = WeylElement::all(n);
  std::vector<std::string> fps;
  std::vector<std::vector<std::string>> orbit_min;
  std::vector<TorusCoordinates> pts;
  for (auto& a : vals)
    for (auto& b : vals)
      for (auto& c : vals)
        for (auto& d : vals) pts.push_back({a, b, c, d});
  for (auto& s : pts) {
    fps.push_back(fingerprint_key(fingerprint(torus_from_coords(s).g)));
    std::vector<std::string> best;
    for (auto& w : W) {
      auto k = coords_key(weyl_act(w, s));
      if (best.empty() || k < best) best = k;
    }
    orbit_min.push_back(best);
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      bool ok = (fps[i] == fps[j]) == (orbit_min[i] == orbit_min[j]);
      v.expect(ok, ok ? "" : "fingerprint vs Weyl orbit disagree on " + coords_str(pts[i]) + " and " + coords_str(pts[j]));
    }
  for (int m = 4; m <= 6; ++m) {
    QuadSpace V = QuadSpace::even(m);
    Rng rng = Rng::derive(kSeed, "c11", m);
    for (int t = 0; t < 10; ++t) {
      auto g = t % 2 ? rng.torus(m).g : rng.gspin_mixed(m);
      auto p = rng.gspin(V);
      v.expect(is_conjugate_gspin(g, p * g * p.inverse()),
               "inner conjugation changes the fingerprint at n=" + std::to_string(m));
    }
  }
  return v;
}

Verdict c12() {
  Verdict v;
  GaussRat I = GaussRat::i();
  for (int n = 3; n <= 6; ++n) {
    auto so = z1_b1_h1(InvolutionModule::from_center(center(GroupTag::SO, n)));
    v.expect(so.structure == "Z/2" && so.h1_reps.size() == 2 && so.h1_reps[1] == TorusCoordinates{-1},
             "SO: H¹ is not Z/2 represented by −1");
    auto gs = z1_b1_h1(InvolutionModule::from_center(center(GroupTag::GSpin, n)));
    v.expect(gs.structure == "Z/2" && gs.z1.size() == 4 && gs.b1.size() == 2 && gs.h1_reps.size() == 2 &&
                 (gs.h1_reps[1] == TorusCoordinates{I, -1} || gs.h1_reps[1] == TorusCoordinates{-I, -1}),
             "GSpin: H¹ is not Z/2 represented by (i, −1)");

    QuadSpace V = QuadSpace::even(n);
    Rng rng = Rng::derive(kSeed, "c12", n);
    CliffordGroupModel M{n};
    auto C = center(GroupTag::GSpin, n);
    auto mod = InvolutionModule::from_center(C);
    for (int t = 0; t < 3; ++t) {
      auto x = rng.gspin(V);
      auto g0 = x * theta(x).inverse();
      GeneratorTable<CliffordGroupModel> tab;
      for (int k = 0; k < 2; ++k) {
        auto h = rng.gspin(V);
        tab.emplace_back(h, g0 * theta(h) * g0.inverse());
      }
      v.expect(check_extension_criterion(M, tab, g0), "criterion rejects g0 = xθ(x)⁻¹");
      auto cls = extension_classes(M, tab, g0, gs);
      v.expect(cls.size() == gs.h1_reps.size(), "one extension per H¹ class");
      for (auto& z : C.torsion)
        v.expect(check_extension_criterion(M, tab, g0 * M.lift(z)) == is_cocycle(mod, z),
                 "twist by " + coords_str(z) + " disagrees with the cocycle condition");
    }
    SOMatrixModel S{n};
    Mat x = rng.gspin(V).pr_circ();
    Mat g0 = x * inverse(theta_circ(x));
    Mat h = rng.gspin(V).pr_circ();
    GeneratorTable<SOMatrixModel> tab{{h, g0 * theta_circ(h) * inverse(g0)}};
    auto cls = extension_classes(S, tab, g0, so);
    v.expect(cls.size() == 2 && cls[1] == GaussRat(-1) * cls[0], "SO extensions do not differ by −1");
  }
  return v;
}

Verdict c13() {
  Verdict v;
  for (int n = 3; n <= 6; ++n)
    for (Eps e : {Eps::Plus, Eps::Minus}) {
      Rng rng = Rng::derive(kSeed, "c13-" + eps_str(e), n);
      for (int t = 0; t < 200; ++t) {
        HighestWeight lam(rng.dominant(n));
        v.expect(ht_multiset(n, e, lam, 1) == ht_via_spin_weights(n, e, lam, 1),
                 "HT formula mismatch at λ=" + weight_str(lam.a));
      }
    }
  HighestWeight zero({0, 0, 0, 0});
  for (Eps e : {Eps::Plus, Eps::Minus})
    v.expect(ht_multiset(3, e, zero, 1).values == std::vector<long>{0, 1, 2, 3}, "λ=0 does not give {0,1,2,3}");
  Rng rng = Rng::derive(kSeed, "c13-reg", 0);
  long bad = 0;
  std::string first;
  for (int t = 0; t < 500; ++t) {
    int n = static_cast<int>(rng.uniform(3, 6));
    HighestWeight lam(rng.dominant(n));
    if (is_spin_regular(lam) && !is_std_regular(lam)) {
      if (!bad) first = weight_str(lam.a) + " with b=" + weight_str(b_shift(lam));
      ++bad;
    }
  }
  v.expect(bad == 0, "spin-reg without std-reg on " + std::to_string(bad) + "/500 λ, first " + first);
  return v;
}

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(SPINLAB_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

Verdict c14() {
  Verdict v;
  auto a = run_cli("verify --suites all --n 3..5 --seed 7");
  auto b = run_cli("verify --suites all --n 3..5 --seed 7");
  v.expect(a.code == 0, "first run exited " + std::to_string(a.code));
  v.expect(b.code == 0, "second run exited " + std::to_string(b.code));
  v.expect(!a.out.empty() && a.out == b.out, "reports differ between runs");
  auto l = run_cli("verify --list");
  v.expect(l.code == 0, "--list exited " + std::to_string(l.code));
  std::set<std::string> listed;
  try {
    for (auto& s : json::parse(l.out)) listed.insert(s.at("suite").get<std::string>());
  } catch (const std::exception& e) {
    v.expect(false, std::string("--list output unreadable: ") + e.what());
  }
  for (auto& k : in_scope_keys()) v.expect(listed.count(k) == 1, "--list misses " + k);
  return v;
}

const std::map<int, std::function<Verdict()>>& criteria() {
  static const std::map<int, std::function<Verdict()>> m = {
      {1, c1}, {2, c2}, {3, c3}, {4, c4}, {5, c5}, {6, c6}, {7, c7},
      {8, c8}, {9, c9}, {10, c10}, {11, c11}, {12, c12}, {13, c13}, {14, c14}};
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  std::string which = argc > 1 ? argv[1] : "all";
  std::vector<int> todo;
  if (which == "all") {
    for (auto& [k, f] : criteria()) todo.push_back(k);
  } else {
    int k = 0;
    try {
      k = std::stoi(which);
    } catch (const std::exception&) {
    }
    if (!criteria().count(k)) {
      std::cerr << "usage: acceptance [1-14|all]\n";
      return 2;
    }
    todo.push_back(k);
  }
  bool all = true;
  for (int k : todo) {
    Verdict r;
    try {
      r = criteria().at(k)();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << k << ": " << (r.pass ? "PASS" : "FAIL") << "  checks=" << r.checks;
    if (!r.pass) std::cout << "  failures=" << r.failures << "  " << r.detail;
    std::cout << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
