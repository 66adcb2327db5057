// Acceptance criteria runner. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails. `--full` adds the rank-4 normal form sweep.

#include "brauer/structure.hpp"

#include "golden.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace brauer;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

constexpr double kNoLimit = std::numeric_limits<double>::infinity();

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void counting_table(Outcome& o) {
  const int table[] = {1, 1, 3, 7, 25, 81, 331, 1303, 5937};
  for (int k = 0; k <= 8; ++k)
    o.require(count_recursion(k) == table[k], "recursion a_" + std::to_string(k));
  for (int n = 0; n <= 4; ++n)
    o.require(count_closed(n) == table[2 * n], "closed formula a_" + std::to_string(2 * n));
  o.detail << "a_0..a_8 = 1,1,3,7,25,81,331,1303,5937";
}

void symmetric_enumeration(Outcome& o) {
  for (int n = 1; n <= 4; ++n) {
    std::uint64_t sym = 0;
    for_each_diagram(2 * n, [&](const Diagram& d) { sym += is_symmetric(d) ? 1 : 0; });
    o.require(BigInt(sym) == count_closed(n), "n=" + std::to_string(n));
    o.detail << (n > 1 ? "," : "") << sym;
  }
}

void homomorphism(Outcome& o) {
  std::size_t checks = 0;
  for (int n = 2; n <= 5; ++n) {
    Report c = relation_suite_C(n);
    Report a = relation_suite_A(2 * n);
    o.require(c.passed() && c.size() > 0, "type C relations, n=" + std::to_string(n));
    o.require(a.passed() && a.size() > 0, "type A relations on " + std::to_string(2 * n) + " strands");
    checks += c.size() + a.size();
  }
  o.detail << checks << " exact identities";
}

void golden_basis(Outcome& o) {
  auto groups = testing::golden_rank_two_words();
  std::set<Diagram> all;
  for (int layer = 0; layer < 3; ++layer) {
    std::set<Diagram> part;
    for (const auto& w : groups[layer]) {
      Diagram d = eval_C(w, 2).diagram;
      o.require(d.top_horizontal_count() == layer, "layer of " + to_string(w));
      part.insert(d);
      all.insert(d);
    }
    o.detail << (layer ? "/" : "") << part.size();
  }
  o.require(all.size() == 25, "25 distinct diagrams");
  o.require(groups[0].size() == 8 && groups[1].size() == 8 && groups[2].size() == 9, "8/8/9 split");
}

void normal_form(Outcome& o, int max_rank) {
  const double limits[] = {0, 10, 10, 10, 300};
  for (int n = 2; n <= max_rank; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    WeylGroup w = WeylGroup::build(n);
    try {
      NormalFormBasis basis = NormalFormBasis::build(w);
      std::set<Diagram> image;
      for (const auto& e : basis.entries()) image.insert(e.diagram);
      std::uint64_t covered = 0;
      for_each_diagram(2 * n, [&](const Diagram& d) {
        if (is_symmetric(d)) covered += image.count(d);
      });
      o.require(BigInt(image.size()) == count_closed(n), "count at n=" + std::to_string(n));
      o.require(image.size() == basis.entries().size(), "distinct at n=" + std::to_string(n));
      o.require(covered == image.size(), "covering at n=" + std::to_string(n));
      o.detail << (n > 2 ? ", " : "") << "n=" << n << ": " << image.size();
    } catch (const std::logic_error& e) {
      o.require(false, e.what());
    }
    o.require(seconds_since(t0) < limits[n], "time at n=" + std::to_string(n));
  }
}

void orbit_sizes(Outcome& o) {
  std::size_t cases = 0;
  for (int n = 1; n <= 4; ++n) {
    WeylGroup w = WeylGroup::build(n);
    for (int i = 0; i <= n; ++i)
      for (int p : valid_p(i)) {
        CosetData c = stabilizer_and_cosets(w, i, p);
        o.require(BigInt(c.orbit.size()) == orbit_size_formula(n, i, p),
                  "n=" + std::to_string(n) + " i=" + std::to_string(i) + " p=" + std::to_string(p));
        ++cases;
      }
  }
  o.detail << cases << " (n, i, p) cases";
}

void uvw(Outcome& o) {
  for (int strands : {4, 6}) {
    Report r = uvw_suite(strands);
    o.require(r.passed(), "uvw on " + std::to_string(strands) + " strands");
    o.detail << (strands > 4 ? ", " : "") << diagram_count(strands) << " diagrams on " << strands << " strands";
  }
}

void admissibility(Outcome& o) {
  bool a = is_admissible_C({make_root_c({0, 1}), make_root_c({1, 1})}, 2);
  bool b = is_admissible_C({make_root_c({1, 0}), make_root_c({1, 2})}, 2);
  bool c = is_admissible_C({make_root_c({0, 1, 0, 0}), make_root_c({0, 0, 0, 1})}, 4);
  o.require(!a && b && c, "expected (false, true, true)");
  o.detail << std::boolalpha << "(" << a << ", " << b << ", " << c << ")";
}

void filtration(Outcome& o) {
  for (int n = 2; n <= 3; ++n) {
    WeylGroup w = WeylGroup::build(n);
    NormalFormBasis basis = NormalFormBasis::build(w);
    CellDatum datum = build_cell_datum(basis);
    Report r = check_filtration(datum);
    o.require(r.passed(), "filtration at n=" + std::to_string(n));
    o.require(check_cell_datum(datum, basis).passed(), "cell datum at n=" + std::to_string(n));
    o.detail << (n > 2 ? ", " : "") << "n=" << n << ": " << r.size() << " checks";
  }
}

void parabolic(Outcome& o) {
  std::size_t a = parabolic_rank(2, {1}), b = parabolic_rank(3, {1, 2}), c = parabolic_rank(3, {0, 1});
  std::size_t tl = tl_closure_C(2).size();
  o.require(a == 3 && b == 15 && c == 25, "parabolic ranks");
  o.require(tl == 6, "Temperley-Lieb dimension");
  o.detail << a << ", " << b << ", " << c << "; TL " << tl;
}

void action_cross_check(Outcome& o) {
  std::size_t checks = 0;
  for (int strands = 2; strands <= 6; ++strands) {
    Report r = action_suite(strands);
    o.require(r.passed(), std::to_string(strands) + " strands");
    checks += r.size();
  }
  o.detail << checks << " comparisons";
}

}  // namespace

int main(int argc, char** argv) {
  bool full = false;
  for (int k = 1; k < argc; ++k) {
    std::string arg = argv[k];
    if (arg == "--full") {
      full = true;
    } else {
      std::fprintf(stderr, "usage: %s [--full]\n", argv[0]);
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {"AC1", "counting table", 1, counting_table},
      {"AC2", "symmetric enumeration", 30, symmetric_enumeration},
      {"AC3", "homomorphism relations", 60, homomorphism},
      {"AC4", "rank-2 golden basis", kNoLimit, golden_basis},
      {"AC5", full ? "normal form bijection, n=2..4" : "normal form bijection, n=2..3", kNoLimit,
       [full](Outcome& o) { normal_form(o, full ? 4 : 3); }},
      {"AC6", "orbit sizes", kNoLimit, orbit_sizes},
      {"AC7", "UVW decomposition", 60, uvw},
      {"AC8", "admissibility oracle", kNoLimit, admissibility},
      {"AC9", "filtration structure", 120, filtration},
      {"AC10", "parabolic ranks and TL dimension", kNoLimit, parabolic},
      {"AC11", "action cross-check", kNoLimit, action_cross_check},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(t0);
    o.require(elapsed < c.limit_seconds, "time limit exceeded");
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %-4s %s: %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                o.detail.str().c_str(), elapsed);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
