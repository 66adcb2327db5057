#include "brauer/cli.hpp"

#include "brauer/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

namespace brauer::cli {

namespace {

struct Options {
  std::string type = "C";
  int n = 0;
  std::vector<std::string> words;
  std::vector<std::string> suites;
  bool all = false;
  int jobs = 1;
  std::string out_path;
  int i = -1;
  int p = -1;
  std::string J;
};

struct SuiteSpec {
  int min_rank;
  int max_rank;
  std::function<std::vector<Report>(int n, int jobs)> run;
};

BigInt double_factorial(int k) {
  BigInt r = 1;
  for (int t = k; t > 1; t -= 2) r *= t;
  return r;
}

const std::map<std::string, SuiteSpec>& suites() {
  static const std::map<std::string, SuiteSpec> table = {
      {"counting",
       {1, 4,
        [](int n, int jobs) {
          Report rep("counting, rank " + std::to_string(n));
          for (int m = 0; m <= n; ++m)
            rep.add("recursion a_{2n} = closed formula", "n=" + std::to_string(m),
                    count_recursion(2 * m) == count_closed(m));
          const WeylGroup w = WeylGroup::build(n);
          rep.add("sum of (sum_p |D_{i,p}|)^2 |L_i| = a_{2n}", "n=" + std::to_string(n),
                  count_from_cosets(w) == count_closed(n));
          const std::uint64_t sym = count_symmetric_diagrams(2 * n, jobs);
          rep.add("symmetric diagrams on 2n strands = a_{2n}", "n=" + std::to_string(n),
                  BigInt(sym) == count_closed(n), std::to_string(sym));
          return std::vector<Report>{rep};
        }}},
      {"relations", {2, 5, [](int n, int) { return std::vector<Report>{relation_suite_A(2 * n), relation_suite_C(n)}; }}},
      {"roots", {1, 5, [](int n, int) { return std::vector<Report>{root_pair_suite(WeylGroup::build(n))}; }}},
      {"orbits", {1, 5, [](int n, int) { return std::vector<Report>{orbit_suite(WeylGroup::build(n))}; }}},
      {"cosets", {1, 4, [](int n, int) { return std::vector<Report>{coset_suite(WeylGroup::build(n))}; }}},
      {"projection", {1, 4, [](int n, int) { return std::vector<Report>{projection_suite(n)}; }}},
      {"action", {1, 4, [](int n, int) { return std::vector<Report>{action_suite(2 * n)}; }}},
      {"basis",
       {1, 4,
        [](int n, int) {
          const WeylGroup w = WeylGroup::build(n);
          return std::vector<Report>{basis_suite(NormalFormBasis::build(w))};
        }}},
      {"generation", {2, 4, [](int n, int) { return std::vector<Report>{generation_suite(n)}; }}},
      {"uvw", {1, 3, [](int n, int) { return std::vector<Report>{uvw_suite(2 * n)}; }}},
      {"kgroups",
       {1, 4,
        [](int n, int) {
          std::vector<Report> out;
          for (const auto& b : all_admissible_sets(2 * n))
            if (height_set(b) == 0) out.push_back(k_group_suite(b));
          Report rep("sigma-fixed part of K_i, rank " + std::to_string(n));
          for (int i = 0; i <= n; ++i) {
            BigInt expect = 1;
            for (int t = 1; t <= n - i; ++t) expect *= 2 * t;
            const std::size_t got = sigma_fixed_k_order(n, i);
            rep.add("sigma-fixed elements of K_i number 2^(n-i) (n-i)!", "i=" + std::to_string(i), BigInt(got) == expect,
                    std::to_string(got) + " vs " + expect.str());
          }
          out.push_back(rep);
          return out;
        }}},
      {"cell",
       {1, 3,
        [](int n, int) {
          const WeylGroup w = WeylGroup::build(n);
          const NormalFormBasis basis = NormalFormBasis::build(w);
          return std::vector<Report>{check_cell_datum(build_cell_datum(basis), basis)};
        }}},
      {"filtration",
       {1, 3,
        [](int n, int) {
          const WeylGroup w = WeylGroup::build(n);
          return std::vector<Report>{check_filtration(build_cell_datum(NormalFormBasis::build(w)))};
        }}},
      {"parabolic",
       {1, 4,
        [](int n, int) {
          Report rep("parabolic subalgebras, rank " + std::to_string(n));
          for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
              std::vector<int> J;
              for (int j = a; j <= b; ++j) J.push_back(j);
              const int k = static_cast<int>(J.size());
              const BigInt expect = a == 0 ? count_recursion(2 * k) : double_factorial(2 * k + 1);
              const std::size_t got = parabolic_rank(n, J);
              rep.add("rank of the parabolic subalgebra = Brauer rank of its type",
                      "J=" + std::to_string(a) + ".." + std::to_string(b), BigInt(got) == expect,
                      std::to_string(got) + " vs " + expect.str());
            }
          return std::vector<Report>{rep};
        }}},
      {"tl", {1, 4, [](int n, int) { return std::vector<Report>{tl_subalgebra(n)}; }}},
  };
  return table;
}

void require_rank(const Options& o, int lo, int hi, const std::string& verb) {
  if (o.n < lo || o.n > hi)
    throw std::invalid_argument(verb + " needs --n in " + std::to_string(lo) + ".." + std::to_string(hi));
}

Monomial evaluate(const Options& o, const std::string& word) {
  if (o.type == "A") {
    require_rank(o, 1, 127, "type A evaluation");
    return evaluate_word(parse_word_a(word), o.n);
  }
  require_rank(o, 1, 63, "type C evaluation");
  return eval_C(parse_word_c(word), o.n);
}

Json cmd_eval(const Options& o) {
  if (o.words.size() != 1) throw std::invalid_argument("eval takes exactly one --word");
  return to_json(evaluate(o, o.words.front()));
}

Json cmd_mul(const Options& o) {
  if (o.words.empty()) throw std::invalid_argument("mul needs at least one --word");
  Monomial acc = evaluate(o, o.words.front());
  for (std::size_t k = 1; k < o.words.size(); ++k) acc = acc * evaluate(o, o.words[k]);
  return to_json(acc);
}

Json cmd_phi(const Options& o) {
  if (o.words.size() != 1) throw std::invalid_argument("phi takes exactly one --word");
  require_rank(o, 1, 63, "phi");
  const WordC w = parse_word_c(o.words.front());
  return {{"strands", 2 * o.n}, {"word", to_json(phi_word(w, o.n))}, {"monomial", to_json(eval_C(w, o.n))}};
}

Json cmd_count(const Options& o) {
  if (o.n < 0) throw std::invalid_argument("count needs --n >= 0");
  if (o.type == "A") return {{"rank", to_json(diagram_count(std::max(o.n, 0)))}};
  return {{"a", to_json(count_closed(o.n))}};
}

Json cmd_basis(const Options& o) {
  require_rank(o, 1, 4, "basis");
  const WeylGroup w = WeylGroup::build(o.n);
  const NormalFormBasis basis = NormalFormBasis::build(w);
  Json elements = Json::array();
  for (const auto& e : basis.entries()) {
    Json j = to_json(e.nf, w);
    j["diagram"] = to_json(e.diagram);
    elements.push_back(std::move(j));
  }
  return {{"n", o.n}, {"size", basis.entries().size()}, {"elements", std::move(elements)}};
}

Json cmd_orbit(const Options& o) {
  require_rank(o, 1, 5, "orbit");
  const WeylGroup w = WeylGroup::build(o.n);
  const CosetData c = stabilizer_and_cosets(w, o.i, o.p);
  Json reps = Json::array();
  for (std::size_t k = 0; k < c.d_reps.size(); ++k)
    reps.push_back({{"word", to_json(w[c.d_reps[k]].word)}, {"set", to_json(c.orbit[k])}});
  return {{"n", o.n},
          {"i", o.i},
          {"p", o.p},
          {"B", to_json(B_set(o.n, o.i, o.p))},
          {"size", c.orbit.size()},
          {"expected", to_json(orbit_size_formula(o.n, o.i, o.p))},
          {"stabilizer_order", c.stabilizer.size()},
          {"representatives", std::move(reps)}};
}

Json cmd_decompose(const Options& o) {
  if (o.words.size() != 1) throw std::invalid_argument("decompose takes exactly one --word");
  const Monomial a = evaluate(o, o.words.front());
  const UVWDecomposition d = decompose(a);
  Json j = to_json(d);
  j["input"] = to_json(a);
  j["heights"] = {{"a", height(a.diagram)}, {"U", height(d.U)}, {"V", height(d.V)}, {"W", height(d.W)}};
  return j;
}

Json cmd_verify(const Options& o, bool& passed) {
  std::vector<std::string> names = o.suites;
  if (o.all) names = suite_names();
  if (names.empty()) throw std::invalid_argument("verify needs --suite or --all");
  Json reports = Json::array();
  Json skipped = Json::array();
  passed = true;
  for (const auto& name : names) {
    auto it = suites().find(name);
    if (it == suites().end()) throw std::invalid_argument("unknown suite '" + name + "'");
    const SuiteSpec& spec = it->second;
    if (o.n < spec.min_rank || o.n > spec.max_rank) {
      if (!o.all)
        throw std::invalid_argument("suite " + name + " needs --n in " + std::to_string(spec.min_rank) + ".." +
                                    std::to_string(spec.max_rank));
      skipped.push_back(name);
      continue;
    }
    for (const auto& r : spec.run(o.n, o.jobs)) {
      passed = passed && r.passed();
      Json j = to_json(r);
      j["suite"] = name;
      reports.push_back(std::move(j));
    }
  }
  return {{"n", o.n}, {"passed", passed}, {"reports", std::move(reports)}, {"skipped", std::move(skipped)}};
}

Json cmd_cell(const Options& o) {
  require_rank(o, 1, 3, "cell");
  const WeylGroup w = WeylGroup::build(o.n);
  const NormalFormBasis basis = NormalFormBasis::build(w);
  return to_json(build_cell_datum(basis), w);
}

Json cmd_parabolic(const Options& o) {
  require_rank(o, 1, 5, "parabolic");
  std::vector<int> J;
  std::string cur;
  for (char c : o.J + ",") {
    if (c != ',') {
      cur += c;
      continue;
    }
    if (cur.empty()) continue;
    std::size_t used = 0;
    int v = std::stoi(cur, &used);
    if (used != cur.size()) throw std::invalid_argument("bad node '" + cur + "' in --J");
    J.push_back(v);
    cur.clear();
  }
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  return {{"n", o.n}, {"J", J}, {"rank", parabolic_rank(o.n, J)}};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"counting", "relations",  "roots",   "orbits",    "cosets",
                                                 "projection", "action",   "basis",   "generation", "uvw",
                                                 "kgroups",  "cell",       "filtration", "parabolic", "tl"};
  return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic and verification for Brauer algebras of types A and C", "brauer"};
  app.require_subcommand(1);
  Options o;

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "Algebra type")->check(CLI::IsMember({"A", "C"}));
  };
  auto add_n = [&](CLI::App* sub, const std::string& help) { sub->add_option("--n", o.n, help)->required(); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out_path, "Write JSON to this file"); };

  auto* eval = app.add_subcommand("eval", "Evaluate a word to a monomial");
  auto* mul = app.add_subcommand("mul", "Multiply the monomials of several words");
  for (auto* sub : {eval, mul}) {
    add_type(sub);
    add_n(sub, "Strand count for type A, rank for type C");
    sub->add_option("--word", o.words, "Comma-separated tokens")->required();
  }
  auto* phi = app.add_subcommand("phi", "Image of a type C word in type A");
  add_n(phi, "Rank");
  phi->add_option("--word", o.words, "Comma-separated type C tokens")->required();
  auto* count = app.add_subcommand("count", "Rank of the algebra");
  add_type(count);
  add_n(count, "Strand count for type A, rank for type C");
  auto* basis = app.add_subcommand("basis", "Normal form basis of the type C algebra");
  add_n(basis, "Rank (at most 4)");
  auto* orbit = app.add_subcommand("orbit", "Weyl group orbit of B_{i,p}");
  add_n(orbit, "Rank");
  orbit->add_option("--i", o.i, "Number of horizontal strands")->required();
  orbit->add_option("--p", o.p, "Number of sigma-fixed strands")->required();
  auto* decomp = app.add_subcommand("decompose", "UVW decomposition of a monomial");
  add_type(decomp);
  add_n(decomp, "Strand count for type A, rank for type C");
  decomp->add_option("--word", o.words, "Comma-separated tokens")->required();
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_n(verify, "Rank");
  verify->add_option("--suite", o.suites, "Suite name (repeatable)");
  verify->add_flag("--all", o.all, "Run every suite valid at this rank");
  verify->add_option("--jobs", o.jobs, "Worker threads for enumeration")->check(CLI::PositiveNumber);
  auto* cell = app.add_subcommand("cell", "Cell datum of the type C algebra");
  add_n(cell, "Rank (at most 3)");
  auto* parabolic = app.add_subcommand("parabolic", "Rank of a parabolic subalgebra");
  add_n(parabolic, "Rank");
  parabolic->add_option("--J", o.J, "Comma-separated node subset")->required();
  for (auto* sub : {eval, mul, phi, count, basis, orbit, decomp, verify, cell, parabolic}) add_out(sub);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Json result;
  int status = kExitOk;
  try {
    if (eval->parsed()) result = cmd_eval(o);
    if (mul->parsed()) result = cmd_mul(o);
    if (phi->parsed()) result = cmd_phi(o);
    if (count->parsed()) result = cmd_count(o);
    if (basis->parsed()) result = cmd_basis(o);
    if (orbit->parsed()) result = cmd_orbit(o);
    if (decomp->parsed()) result = cmd_decompose(o);
    if (cell->parsed()) result = cmd_cell(o);
    if (parabolic->parsed()) result = cmd_parabolic(o);
    if (verify->parsed()) {
      bool passed = true;
      result = cmd_verify(o, passed);
      if (!passed) status = kExitVerifyFailed;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitVerifyFailed;
  }

  const std::string text = result.dump() + "\n";
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out_path);
    if (!f) {
      err << "error: cannot open " << o.out_path << " for writing\n";
      return kExitUsage;
    }
    f << text;
  }
  return status;
}

}  // namespace brauer::cli
