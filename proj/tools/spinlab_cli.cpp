// spinlab: exact verifier and table generator for GSpin/GPin and their spin representations.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "spinlab/verify.hpp"

using namespace spinlab;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::pair<int, int> parse_n_range(const std::string& s) {
  auto parse_int = [&](const std::string& t) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      throw UsageError("--n: expected an integer or a..b, got '" + s + "'");
    }
    if (used != t.size()) throw UsageError("--n: expected an integer or a..b, got '" + s + "'");
    return v;
  };
  auto dots = s.find("..");
  int lo = 0, hi = 0;
  if (dots == std::string::npos) {
    lo = hi = parse_int(s);
  } else {
    lo = parse_int(s.substr(0, dots));
    hi = parse_int(s.substr(dots + 2));
  }
  if (lo > hi) throw UsageError("--n: empty range");
  if (lo < 3 || hi > 8) throw UsageError("--n: supported range is 3..8");
  return {lo, hi};
}

Eps parse_eps(const std::string& s) {
  if (s == "+" || s == "plus" || s == "1" || s == "+1") return Eps::Plus;
  if (s == "-" || s == "minus" || s == "-1") return Eps::Minus;
  throw UsageError("--eps must be + or -");
}

GroupTag parse_group(const std::string& s) {
  if (s == "so") return GroupTag::SO;
  if (s == "spin") return GroupTag::Spin;
  if (s == "gspin") return GroupTag::GSpin;
  if (s == "gso") return GroupTag::GSO;
  throw UsageError("--group must be one of so, spin, gspin, gso");
}

// literal JSON, or @path to read it from a file
json read_json_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw UsageError("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

GPinElement read_element(const std::string& arg) {
  return GPinElement(element_from_json(read_json_arg(arg)));
}

json basis_manifest(const std::vector<Subset>& basis) {
  json out = json::array();
  for (Subset u : basis) out.push_back(subset_elements(u));
  return out;
}

json fingerprint_json(const Fingerprint& f) {
  json j = {{"parity", f.parity}, {"norm", f.norm.str()}, {"charpoly_std", to_json(f.cp_std)}};
  if (f.parity == 0) {
    j["charpoly_spin_plus"] = to_json(f.cp_spin_plus);
    j["charpoly_spin_minus"] = to_json(f.cp_spin_minus);
  } else {
    j["charpoly_spin"] = to_json(f.cp_spin_full);
  }
  return j;
}

struct TableArgs {
  int n = 4;
  std::string eps = "+";
  std::string group = "gspin";
  std::string lambda;
  long mult = 1;
  std::string element, g, h;
};

void check_n(int n) {
  if (n < 3 || n > 8) throw UsageError("--n: supported range is 3..8");
}

json table_weights(const TableArgs& a) {
  check_n(a.n);
  Eps e = parse_eps(a.eps);
  return {{"n", a.n},
          {"epsilon", eps_str(e)},
          {"highest_weight", mu_eps(a.n, e)},
          {"weights", weights_to_json(spin_weights(a.n, e))}};
}

json table_center(const TableArgs& a) {
  check_n(a.n);
  auto C = center(parse_group(a.group), a.n);
  json tors = json::array();
  for (auto& z : C.torsion)
    tors.push_back({{"element", to_json(z)}, {"order", C.order(z)}, {"theta", to_json(C.theta(z))}});
  json gens = json::array();
  for (auto& z : C.generators) gens.push_back({{"element", to_json(z)}, {"order", C.order(z)}});
  return {{"group", tag_name(C.tag)}, {"n", a.n},         {"has_gm", C.has_gm},
          {"structure", C.structure}, {"generators", gens}, {"torsion", tors}};
}

json table_roots(const TableArgs& a) {
  check_n(a.n);
  return {{"n", a.n},
          {"simple_roots", weights_to_json(simple_roots(a.n))},
          {"simple_coroots", weights_to_json(simple_coroots(a.n))},
          {"roots", weights_to_json(roots(a.n))},
          {"coroots", weights_to_json(coroots(a.n))}};
}

json table_ht(const TableArgs& a) {
  check_n(a.n);
  Eps e = parse_eps(a.eps);
  if (a.lambda.empty()) throw UsageError("ht-weights needs --lambda '[a0,...,an]'");
  json lj = read_json_arg(a.lambda);
  if (!lj.is_array()) throw ParseError("--lambda must be a JSON array of integers");
  WeightVector lam;
  for (auto& x : lj) {
    if (!x.is_number_integer()) throw ParseError("--lambda must be a JSON array of integers");
    lam.push_back(x.get<long>());
  }
  if (static_cast<int>(lam.size()) != a.n + 1) throw UsageError("--lambda must have n+1 entries");
  HighestWeight hw(lam);
  auto h = ht_multiset(a.n, e, hw, a.mult);
  json counts = json::array();
  for (std::size_t k = 0; k < h.values.size();) {
    std::size_t j = k;
    while (j < h.values.size() && h.values[j] == h.values[k]) ++j;
    counts.push_back({h.values[k], j - k});
    k = j;
  }
  return {{"n", a.n},
          {"epsilon", eps_str(e)},
          {"lambda", lam},
          {"b", b_shift(hw)},
          {"multiplicity", h.multiplicity},
          {"weights", h.values},
          {"counts", counts},
          {"std_regular", is_std_regular(hw)},
          {"spin_regular", is_spin_regular(hw)}};
}

json table_spin_matrix(const TableArgs& a) {
  if (a.element.empty()) throw UsageError("spin-matrix needs --element");
  auto g = read_element(a.element);
  int n = g.space().n();
  json out = {{"n", n}, {"kind", g.space().kind() == SpaceKind::Even ? "even" : "odd"}, {"norm", g.norm().str()}};
  if (g.space().kind() == SpaceKind::Odd) {
    out["representation"] = "spin";
    out["basis"] = basis_manifest(odd_module_basis(n));
    out["matrix"] = to_json(spin_matrix(g).mat);
  } else if (g.is_even() && a.eps != "full") {
    Eps e = parse_eps(a.eps);
    out["representation"] = "spin" + eps_str(e);
    out["basis"] = basis_manifest(FockBasis(n).half(e));
    out["matrix"] = to_json(half_spin_matrix(g, e).mat);
  } else {
    out["representation"] = "spin";
    out["basis"] = basis_manifest(FockBasis(n).full());
    out["matrix"] = to_json(spin_matrix(g).mat);
  }
  return out;
}

json table_conj(const TableArgs& a) {
  if (a.g.empty() || a.h.empty()) throw UsageError("conj needs --g and --h");
  auto g = read_element(a.g), h = read_element(a.h);
  if (g.space() != h.space()) throw UsageError("conj: elements live in different spaces");
  if (g.space().kind() != SpaceKind::Even) throw UsageError("conj: elements must lie in GPin_2n");
  json out = {{"fingerprint_g", fingerprint_json(fingerprint(g))},
              {"fingerprint_h", fingerprint_json(fingerprint(h))},
              {"gpin", is_conjugate_gpin(g, h)}};
  if (g.is_even() && h.is_even()) {
    out["inner"] = is_conjugate_gspin(g, h);
    out["outer"] = is_outer_conjugate(g, h);
  } else {
    out["inner"] = nullptr;
    out["outer"] = nullptr;
  }
  return out;
}

json table_h1(const TableArgs& a) {
  check_n(a.n);
  auto C = center(parse_group(a.group), a.n);
  auto H = z1_b1_h1(InvolutionModule::from_center(C));
  auto list = [](const std::vector<CenterElem>& v) {
    json out = json::array();
    for (auto& z : v) out.push_back(to_json(z));
    return out;
  };
  return {{"group", tag_name(C.tag)}, {"n", a.n},       {"z1", list(H.z1)},
          {"b1", list(H.b1)},         {"h1", list(H.h1_reps)}, {"structure", H.structure}};
}

using TableFn = json (*)(const TableArgs&);

struct TableKind {
  const char* name;
  const char* help;
  TableFn fn;
};

const std::vector<TableKind>& table_kinds() {
  static const std::vector<TableKind> kinds = {
      {"weights", "weights of spin^eps", table_weights},
      {"center", "center of SO/Spin/GSpin/GSO with θ-action", table_center},
      {"roots", "roots and coroots of GSO_2n", table_roots},
      {"ht-weights", "Hodge-Tate multiset for (n, eps, lambda)", table_ht},
      {"spin-matrix", "spin representation matrix of an element", table_spin_matrix},
      {"conj", "fingerprints and conjugacy verdicts for two elements", table_conj},
      {"h1", "Z1/B1/H1 of the center under θ", table_h1},
  };
  return kinds;
}

void add_table_options(CLI::App* sub, TableArgs& a) {
  sub->set_help_flag("--help", "print this help");  // -h is taken by --h
  sub->add_option("--n", a.n, "rank n");
  sub->add_option("--eps", a.eps, "+ or - (spin-matrix also accepts full)");
  sub->add_option("--group", a.group, "so | spin | gspin | gso");
  sub->add_option("--lambda", a.lambda, "highest weight as a JSON array [a0,...,an]");
  sub->add_option("--mult", a.mult, "multiplicity");
  sub->add_option("--element", a.element, "element JSON or @file");
  sub->add_option("--g", a.g, "first element JSON or @file");
  sub->add_option("--h", a.h, "second element JSON or @file");
}

std::string render_text(const json& report) {
  std::ostringstream os;
  for (auto& r : report["suites"]) {
    os << (r["status"] == "pass" ? "PASS" : "FAIL") << "  " << r["suite"].get<std::string>() << "  n=" << r["n"]
       << "  checks=" << r["checks"];
    if (r.contains("wall_ms")) os << "  " << r["wall_ms"].get<double>() << "ms";
    os << "\n";
    if (r.contains("counterexample")) os << "      " << r["counterexample"].dump() << "\n";
  }
  auto& s = report["summary"];
  os << s["passed"] << "/" << s["total"] << " passed\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinlab: exact verification of GSpin/GPin identities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  VerifyOptions vo;
  std::vector<std::string> suites{"all"};
  std::string n_range = "3..5", out_path, format = "json";
  bool list = false;
  auto* verify = app.add_subcommand("verify", "run lemma-keyed verification suites");
  verify->add_option("--suites", suites, "comma-separated suite keys, or all")->delimiter(',');
  verify->add_option("--n", n_range, "n or a..b");
  verify->add_option("--trials", vo.trials, "random trials per suite and n")->check(CLI::Range(1, 100000));
  verify->add_option("--seed", vo.seed, "PRNG seed");
  verify->add_option("--out", out_path, "write the report here instead of stdout");
  verify->add_flag("--list", list, "print the suite registry");
  verify->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
  verify->add_flag("--timing", vo.timing, "include wall_ms per record (breaks byte-stability)");

  TableArgs ta;
  std::string kind;
  auto* table = app.add_subcommand("table", "emit a table as JSON");
  std::vector<std::string> kind_names;
  for (auto& k : table_kinds()) kind_names.push_back(k.name);
  table->add_option("kind", kind, "table kind")->required()->check(CLI::IsMember(kind_names));
  add_table_options(table, ta);
  std::vector<std::pair<CLI::App*, TableFn>> aliases;
  for (auto& k : table_kinds()) {
    auto* sub = app.add_subcommand(k.name, k.help);
    add_table_options(sub, ta);
    aliases.emplace_back(sub, k.fn);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) {
      if (list) {
        if (format == "json") {
          json j = json::array();
          for (auto& s : suite_registry())
            j.push_back({{"suite", s.key}, {"title", s.title}, {"fixed_n", s.fixed_n ? json(s.fixed_n) : json()}});
          std::cout << j.dump(2) << "\n";
        } else {
          for (auto& s : suite_registry()) std::cout << s.key << "\t" << s.title << "\n";
        }
        return 0;
      }
      if (!(suites.size() == 1 && suites[0] == "all")) {
        for (auto& k : suites)
          if (!find_suite(k)) throw UsageError("unknown suite key: " + k);
        vo.suites = suites;
      }
      std::tie(vo.n_lo, vo.n_hi) = parse_n_range(n_range);
      auto res = run_verify(vo);
      std::string text = format == "json" ? res.report.dump(2) + "\n" : render_text(res.report);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw UsageError("cannot write " + out_path);
        f << text;
      }
      return res.all_pass ? 0 : 1;
    }
    TableFn fn = nullptr;
    if (*table) {
      for (auto& k : table_kinds())
        if (kind == k.name) fn = k.fn;
    } else {
      for (auto& [sub, f] : aliases)
        if (*sub) fn = f;
    }
    std::cout << fn(ta).dump(2) << "\n";
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  }
}
