// qrep: command-line front end. Every command prints one canonical JSON
// document. Exit codes: 0 success, 1 mathematical failure, 2 bad input.
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qrep/qrep.hpp"

using namespace qrep;

namespace {

struct Options {
  std::string base = "gf:2";
  int nil = 1;
  int length = 4;
  std::string window;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  int max_dim = 2;
  int i = 0;
  int samples = 50;
  std::string quiver = "A2";
  bool timing = false;
  bool inverse = false;
  bool count_only = false;
  std::string witness;
  std::string suite;
  std::string kind;
  std::string f_file, g_file;
  std::vector<std::string> inputs;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json read_json(const std::string& path) { return parse_json_text(read_file(path), path); }

std::pair<int, int> parse_window(const std::string& w) {
  auto colon = w.find(':');
  if (colon == std::string::npos) throw InputError("--window: expected lo:hi");
  int lo = 0, hi = 0;
  try {
    lo = std::stoi(w.substr(0, colon));
    hi = std::stoi(w.substr(colon + 1));
  } catch (const std::logic_error&) {
    throw InputError("--window: expected integers lo:hi");
  }
  if (hi < lo) throw InputError("--window: hi must be at least lo");
  return {lo, hi};
}

std::uint32_t parse_prime(const std::string& base) {
  try {
    return static_cast<std::uint32_t>(std::stoul(base.substr(3)));
  } catch (const std::logic_error&) {
    throw InputError("--base: expected gf:p or rat");
  }
}

/// Resolution length: --window lo:hi asks for resolutions reaching degree lo.
int resolution_length(const Options& o, int lo_of_input) {
  if (o.window.empty()) return o.length;
  auto [lo, hi] = parse_window(o.window);
  (void)hi;
  return std::max(0, lo_of_input - lo);
}

void need_inputs(const Options& o, std::size_t n, const std::string& cmd) {
  if (o.inputs.size() != n)
    throw InputError(cmd + ": expected " + std::to_string(n) + " input file" + (n == 1 ? "" : "s"));
}

void print(const Json& j) { std::cout << dump_json(j); }

template <Field K>
Json resolution_to_json(const Rep<K>& x, const Resolution<K>& r) {
  return {{"complex", complex_to_json(r.complex)},
          {"rho", morphism_to_json(*x.quiver, r.rho)},
          {"length", r.length},
          {"complete", r.complete}};
}

template <Field K>
int run_math(const std::string& cmd, const Options& o, const K& k) {
  BaseAlgebra<K> alg(k, o.nil);
  auto complex_in = [&](std::size_t idx) {
    return complex_from_json(alg, read_json(o.inputs[idx]), o.inputs[idx] + ":$");
  };
  auto rep_in = [&](std::size_t idx) { return rep_from_json(alg, read_json(o.inputs[idx]), o.inputs[idx] + ":$"); };

  if (cmd == "resolve") {
    need_inputs(o, 1, cmd);
    auto j = read_json(o.inputs[0]);
    if (j.is_object() && j.contains("quiver")) {
      auto x = rep_from_json(alg, j, o.inputs[0] + ":$");
      print(resolution_to_json(x, projective_resolution(alg, x, resolution_length(o, 0))));
    } else {
      auto x = complex_from_json(alg, j, o.inputs[0] + ":$");
      auto r = resolve_complex(alg, x, resolution_length(o, x.lo));
      print({{"complex", complex_to_json(r.complex)},
             {"rho", chain_map_to_json(r.complex, x, r.rho)},
             {"cut", r.cut ? Json(*r.cut) : Json(nullptr)}});
    }
    return 0;
  }
  if (cmd == "ext") {
    need_inputs(o, 2, cmd);
    auto x = rep_in(0), y = rep_in(1);
    if (o.i > o.length) throw MathError("ext: degree " + std::to_string(o.i) + " exceeds resolution length " +
                                        std::to_string(o.length));
    print({{"dim", ext_dim(alg, x, y, o.i, o.length)}, {"i", o.i}, {"length", o.length}});
    return 0;
  }
  if (cmd == "dhom") {
    need_inputs(o, 2, cmd);
    auto x = complex_in(0), y = complex_in(1);
    int len = resolution_length(o, x.lo);
    print({{"dim", derived_hom_dim(alg, x, y, o.i, len)}, {"i", o.i}, {"length", len}});
    return 0;
  }
  if (cmd == "cofib" || cmd == "fib") {
    need_inputs(o, 1, cmd);
    auto x = complex_in(0);
    bool cof = cmd == "cofib";
    auto c = cof ? cofibrant_replacement(alg, x, resolution_length(o, x.lo)) : fibrant_replacement(alg, x);
    print(certificate_to_json(x, c, cof));
    return c.ok() ? 0 : 1;
  }
  if (cmd == "khom") {
    need_inputs(o, 2, cmd);
    auto x = complex_in(0), y = complex_in(1);
    if (!o.f_file.empty() || !o.g_file.empty()) {
      if (o.f_file.empty() || o.g_file.empty()) throw InputError("khom: --f and --g go together");
      auto f = chain_map_from_json(k, x, y, read_json(o.f_file), o.f_file + ":$");
      auto g = chain_map_from_json(k, x, y, read_json(o.g_file), o.g_file + ":$");
      auto v = homotopic_cw(alg, x, y, f, g);
      auto dob = divide_object(x);
      Json out = {{"homotopic", v.homotopic}, {"divide_object", complex_to_json(dob.object)}};
      if (v.homotopy) {
        // s^j : X^j -> Y^{j-1}
        Json maps = Json::array();
        for (const auto& m : v.homotopy->maps) maps.push_back(morphism_to_json(*x.quiver, m));
        out["homotopy"] = {{"lo", v.homotopy->lo}, {"maps", maps}};
      }
      if (v.factorization) out["factorization"] = chain_map_to_json(dob.object, y, *v.factorization);
      print(out);
      return 0;
    }
    auto q = cofibrant_replacement(alg, x, resolution_length(o, x.lo));
    auto r = fibrant_replacement(alg, y);
    print({{"dim", homotopy_category_hom_dim_from(q, r)},
           {"cofibrant_certificate", certificate_to_json(x, q, true)},
           {"fibrant_certificate", certificate_to_json(y, r, false)}});
    return 0;
  }
  if (cmd == "psi0") {
    need_inputs(o, 1, cmd);
    auto x = rep_in(0);
    print(rep_to_json(o.inverse ? psi0_inv(alg, x) : psi0(alg, x)));
    return 0;
  }
  if (cmd == "extcmp") {
    need_inputs(o, 2, cmd);
    auto x = rep_in(0), y = rep_in(1);
    auto [a, b] = ext_compare(alg, x, y, o.i, o.length);
    print({{"ext", a}, {"ext_psi0", b}, {"equal", a == b}, {"i", o.i}, {"length", o.length}});
    return 0;
  }
  throw InputError("unknown command '" + cmd + "'");
}

harness::Params harness_params(const Options& o, const CLI::App& sub) {
  if (o.base.rfind("gf:", 0) != 0) throw InputError("--base: verify and enumerate run over gf:p only");
  harness::Params p;
  p.p = parse_prime(o.base);
  PrimeField(p.p);  // rejects non-primes
  p.n = o.nil;
  p.quiver = o.quiver;
  p.max_dim = o.max_dim;
  if (!o.window.empty()) {
    auto [lo, hi] = parse_window(o.window);
    p.window = hi - lo + 1;
  }
  p.length = o.length;
  if (sub.count("--i")) p.max_i = o.i;
  p.seed = o.seed;
  p.exhaustive = o.exhaustive;
  p.samples = o.samples;
  p.timing = o.timing;
  return p;
}

std::string suite_name(std::string s) {
  if (s.rfind("check_", 0) == 0) s = s.substr(6);
  return s;
}

int run_verify(const Options& o, const CLI::App& sub) {
  auto p = harness_params(o, sub);
  if (!o.witness.empty()) {
    auto w = read_json(o.witness);
    if (w.is_object() && w.contains("witness")) w = w["witness"];
    std::string suite = o.suite;
    if (suite.empty()) {
      const auto& s = detail::child(w, "suite", o.witness + ":$");
      if (!s.is_string()) throw InputError(o.witness + ":$.suite: expected a string");
      suite = s.get<std::string>();
    }
    suite = suite_name(suite);
    if (w.contains("params")) {
      auto wp = harness::params_from_json(w["params"], o.witness + ":$.params");
      wp.timing = p.timing;
      p = wp;
    }
    auto reason = harness::recheck_witness(suite, p, w);
    Json out = {{"suite", suite}, {"status", reason ? "fail" : "pass"}};
    if (reason) out["reason"] = *reason;
    print(out);
    return reason ? 1 : 0;
  }
  if (o.suite.empty()) {
    Json list = Json::array();
    for (const auto& s : harness::suites()) list.push_back({{"name", s.name}, {"summary", s.summary}});
    print({{"suites", list}});
    return 0;
  }
  auto r = harness::run_suite(suite_name(o.suite), p);
  print(harness::report_to_json(r));
  return r.passed() ? 0 : 1;
}

int run_enumerate(const Options& o, const CLI::App& sub) {
  using namespace harness;
  auto p = harness_params(o, sub);
  auto alg = p.algebra();
  auto q = p.q();
  auto mods = all_modules(alg, p.max_dim, p.limit);
  Json items = Json::array();
  std::size_t count = 0;
  Rng rng(p.seed);
  if (o.kind == "modules") {
    count = mods.size();
    if (!o.count_only)
      for (const auto& m : mods) items.push_back(module_to_json(m));
  } else if (o.kind == "reps") {
    std::vector<Rep<K>> reps;
    if (p.exhaustive) reps = all_reps(alg, q, mods, p.limit);
    else
      for (int s = 0; s < p.samples; ++s) reps.push_back(random_rep(alg, q, mods, rng));
    count = reps.size();
    if (!o.count_only)
      for (const auto& r : reps) items.push_back(rep_to_json(r));
  } else if (o.kind == "complexes") {
    auto pool = all_reps(alg, q, mods, p.limit);
    std::vector<Complex<K>> cs;
    if (p.exhaustive) cs = all_complexes(alg, q, pool, p.window, p.limit);
    else
      for (int s = 0; s < p.samples; ++s) cs.push_back(random_complex(alg, q, pool, p.window, rng));
    count = cs.size();
    if (!o.count_only)
      for (const auto& c : cs) items.push_back(complex_to_json(c));
  } else {
    throw InputError("enumerate: kind must be modules, reps or complexes");
  }
  Json out = {{"kind", o.kind}, {"count", count}, {"params", params_to_json(p)}};
  if (!o.count_only) out["items"] = items;
  print(out);
  return 0;
}

int dispatch(const std::string& cmd, const Options& o, const CLI::App& sub) {
  if (cmd == "verify") return run_verify(o, sub);
  if (cmd == "enumerate") return run_enumerate(o, sub);
  if (o.base == "rat") return run_math(cmd, o, RationalField());
  if (o.base.rfind("gf:", 0) == 0) {
    return run_math(cmd, o, PrimeField(parse_prime(o.base)));
  }
  throw InputError("--base: expected gf:p or rat");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qrep: exact computations with quiver representations over k[x]/(x^n)"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--base", o.base, "base field: gf:p or rat")->capture_default_str();
    s->add_option("--nil", o.nil, "nilpotency index n of A = k[x]/(x^n)")->capture_default_str();
    s->add_option("--length", o.length, "resolution length L")->capture_default_str();
    s->add_option("--window", o.window, "degree window lo:hi");
    s->add_option("--seed", o.seed, "random seed")->capture_default_str();
    s->add_flag("--exhaustive", o.exhaustive, "enumerate the whole family instead of sampling");
    s->add_option("--max-dim", o.max_dim, "vertex dimension cap for generated objects")->capture_default_str();
    s->add_option("--i", o.i, "cohomological degree (verify: largest degree)");
    s->add_option("--samples", o.samples, "number of random cases")->capture_default_str();
    s->add_option("--quiver", o.quiver, "quiver for generated objects: A1, A2, A3, fork")->capture_default_str();
    s->add_flag("--timing", o.timing, "add wall-clock timing to reports (not reproducible)");
  };

  struct Cmd {
    const char* name;
    const char* help;
    int files;
  };
  std::vector<Cmd> cmds{{"resolve", "projective resolution of a representation or complex", 1},
                        {"ext", "dim Ext^i(X, Y) of representations", 2},
                        {"dhom", "dim Hom_D(X, Y[i]) of complexes", 2},
                        {"cofib", "cofibrant replacement with certificate", 1},
                        {"fib", "fibrant replacement with certificate", 1},
                        {"khom", "homotopy-category Hom dimension, or homotopy of --f and --g", 2},
                        {"psi0", "psi0 of an arrow object (--inverse for its quasi-inverse)", 1},
                        {"extcmp", "Ext^i(X, Y) against Ext^i(psi0 X, psi0 Y)", 2},
                        {"verify", "run a property suite, or recheck a failure witness", 0},
                        {"enumerate", "list generated modules, representations or complexes", 0}};
  std::vector<CLI::App*> subs;
  for (const auto& c : cmds) {
    auto* s = app.add_subcommand(c.name, c.help);
    common(s);
    if (c.files > 0) s->add_option("inputs", o.inputs, "input JSON files ('-' for stdin)")->expected(c.files);
    subs.push_back(s);
  }
  subs[5]->add_option("--f", o.f_file, "first chain map (JSON)");
  subs[5]->add_option("--g", o.g_file, "second chain map (JSON)");
  subs[6]->add_flag("--inverse", o.inverse, "apply the quasi-inverse");
  subs[8]->add_option("suite", o.suite, "suite name (omit to list suites)");
  subs[8]->add_option("--witness", o.witness, "failure witness JSON to recheck");
  subs[9]->add_option("kind", o.kind, "modules, reps or complexes")->required();
  subs[9]->add_flag("--count-only", o.count_only, "print only the count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (std::size_t c = 0; c < subs.size(); ++c) {
    if (!subs[c]->parsed()) continue;
    try {
      return dispatch(cmds[c].name, o, *subs[c]);
    } catch (const InputError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const Json::exception& e) {
      std::cerr << "error: malformed input: " << e.what() << "\n";
      return 2;
    } catch (const MathError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return 2;
}
