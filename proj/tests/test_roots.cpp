#include "brauer/roots.hpp"
#include "brauer/typec.hpp"

#include "support.hpp"

#include <doctest.h>

#include <climits>
#include <map>

using namespace brauer;

namespace {

AdmissibleSetA set_of(int n, std::vector<RootA> roots) { return AdmissibleSetA(n, std::move(roots)); }

std::vector<RootC> sorted(std::vector<RootC> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("admissible sets are validated and canonical") {
  CHECK_THROWS_AS(set_of(4, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(set_of(4, {{1, 5}}), std::invalid_argument);
  CHECK(set_of(4, {{3, 4}, {1, 2}}) == set_of(4, {{1, 2}, {3, 4}}));
  AdmissibleSetA b = set_of(5, {{2, 4}});
  CHECK(b.contains({2, 4}));
  CHECK(b.root_at(4) == 0);
  CHECK(b.root_at(3) == -1);
}

TEST_CASE("tops of small diagrams") {
  CHECK(top(Diagram::identity(4)).empty());
  CHECK(top(generator_E(4, 2)) == set_of(4, {simple_root(2)}));
}

TEST_CASE("tops and bottoms of the eight-strand example") {
  Monomial f = evaluate_word(parse_word_a("R2,R5,E1,R3,R6,E2,E4,E3,E5,E7,R2,E4,E6,R1,E3,E5,R2,E4"), 8);
  CHECK(top(f) == set_of(8, {{1, 3}, {2, 6}, {5, 8}}));
  CHECK(height_set(top(f)) == 4);
  CHECK(height_set(bottom(f)) == 3);
}

TEST_CASE("generator action examples") {
  for (int i = 1; i < 5; ++i)
    CHECK(act_generator({LetterKind::Quasi, i}, AdmissibleSetA(5, {})) == set_of(5, {simple_root(i)}));
  CHECK(act_generator({LetterKind::Quasi, 1}, set_of(3, {simple_root(2)})) == set_of(3, {simple_root(1)}));
  CHECK(act_generator({LetterKind::Reflection, 1}, set_of(3, {simple_root(1)})) == set_of(3, {simple_root(1)}));
  CHECK(act_generator({LetterKind::Delta, 0}, set_of(3, {simple_root(1)})) == set_of(3, {simple_root(1)}));
}

TEST_CASE("case-based action agrees with completion on random words") {
  std::mt19937 rng(testing::kSeed + 10);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 7;
    auto sets = all_admissible_sets(n);
    const AdmissibleSetA& b = sets[std::uniform_int_distribution<std::size_t>(0, sets.size() - 1)(rng)];
    WordA w = testing::random_word_a(rng, n, 8);
    Monomial a = evaluate_word(w, n);
    CHECK(act_word(w, b) == act_left(a, b));
    CHECK(act_right(b, a) == act_left(op(a), b));
  }
}

TEST_CASE("action suite") {
  for (int n = 2; n <= 6; ++n) CHECK_MESSAGE(action_suite(n).passed(), "strands ", n);
}

TEST_CASE("set height is the least height of a completion") {
  for (int n = 1; n <= 6; ++n) {
    std::map<AdmissibleSetA, int> best;
    for_each_diagram(n, [&](const Diagram& d) {
      auto [it, fresh] = best.try_emplace(top(d), INT_MAX);
      it->second = std::min(it->second, height(d));
    });
    CHECK(best.size() == all_admissible_sets(n).size());
    for (const auto& [b, h] : best) CHECK_MESSAGE(height_set(b) == h, b.to_string());
  }
}

TEST_CASE("simple roots have height zero") {
  CHECK(height_set(AdmissibleSetA(6, {})) == 0);
  CHECK(height_set(set_of(6, {simple_root(1), simple_root(3), simple_root(5)})) == 0);
}

TEST_CASE("minimal diagrams with prescribed top and bottom") {
  CHECK(canonical_diagram(AdmissibleSetA(4, {}), AdmissibleSetA(4, {})) == Diagram::identity(4));
  for (int n = 2; n <= 6; ++n) {
    auto sets = all_admissible_sets(n);
    for (const auto& b : sets)
      for (const auto& c : sets) {
        if (b.size() != c.size()) continue;
        Monomial a{0, canonical_diagram(b, c)};
        CHECK(top(a) == b);
        CHECK(bottom(a) == c);
        CHECK(a * op(a) == Monomial{static_cast<int>(b.size()), E_product(b).diagram});
        CHECK(act_left(a, c) == b);
        CHECK(act_right(b, a) == c);
      }
  }
}

TEST_CASE("E_B and its normalization") {
  CHECK(E_product(set_of(4, {simple_root(1), simple_root(3)})) == evaluate_word(parse_word_a("E1,E3"), 4));
  CHECK(evaluate_word(E_root_word({1, 3}), 3).diagram == evaluate_word(parse_word_a("R2,E1,R2"), 3).diagram);
  CHECK(evaluate_word(E_root_word({1, 3}), 3).diagram == evaluate_word(parse_word_a("R1,E2,R1"), 3).diagram);
  for (int n = 2; n <= 6; ++n)
    for (const auto& b : all_admissible_sets(n)) {
      Monomial h = E_hat(b);
      CHECK(h * h == h);
      CHECK(top(h) == b);
    }
}

TEST_CASE("sigma on admissible sets") {
  AdmissibleSetA b = set_of(6, {{1, 3}});
  CHECK(sigma(b) == set_of(6, {{4, 6}}));
  CHECK_FALSE(is_sigma_invariant(b));
  CHECK(is_sigma_invariant(set_of(6, {{1, 3}, {4, 6}})));
  CHECK(is_sigma_invariant(set_of(6, {{3, 4}})));
  std::mt19937 rng(testing::kSeed + 11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 7;
    Diagram d = testing::random_diagram(rng, n);
    CHECK(top(sigma(d)) == sigma(top(d)));
  }
}

TEST_CASE("sigma-invariant sets") {
  CHECK(all_sigma_invariant_sets(4).size() == 6);
  for (const auto& b : all_sigma_invariant_sets(6)) CHECK(is_sigma_invariant(b));
}

TEST_CASE("type C root data") {
  CHECK(inner2(simple_root_c(3, 0).coeffs, simple_root_c(3, 0).coeffs) == 4);
  CHECK(inner2(simple_root_c(3, 1).coeffs, simple_root_c(3, 1).coeffs) == 2);
  CHECK(inner2(simple_root_c(3, 0).coeffs, simple_root_c(3, 1).coeffs) == -2);
  CHECK(inner2(simple_root_c(3, 1).coeffs, simple_root_c(3, 2).coeffs) == -1);
  CHECK(to_string(make_root_c({1, 2})) == "b0+2b1");
  CHECK(make_root_c({-1, -2}) == make_root_c({1, 2}));
  CHECK(make_root_c({1, 2}).norm == RootNorm::Long);
  CHECK(make_root_c({1, 1}).norm == RootNorm::Short);
  CHECK_THROWS_AS(make_root_c({1, 3}), std::invalid_argument);
  for (int n = 1; n <= 5; ++n) {
    auto roots = positive_roots_c(n);
    CHECK(roots.size() == static_cast<std::size_t>(n * n));
    std::size_t longs = 0;
    for (const auto& r : roots) longs += r.norm == RootNorm::Long ? 1 : 0;
    CHECK(longs == static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      std::vector<int> neg = simple_root_c(n, j).coeffs;
      for (int& c : neg) c = -c;
      CHECK(reflect(j, simple_root_c(n, j).coeffs) == neg);
    }
  }
}

TEST_CASE("projection of type A roots") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(fp(simple_root(n), n) == simple_root_c(n, 0));
    CHECK(fp(simple_root(n), n).norm == RootNorm::Long);
    for (int i = 1; i < n; ++i) {
      CHECK(fp(simple_root(n - i), n) == simple_root_c(n, i));
      CHECK(fp(simple_root(n + i), n) == simple_root_c(n, i));
      CHECK(fp(simple_root(n + i), n).norm == RootNorm::Short);
    }
  }
  for (int n = 1; n <= 4; ++n)
    for (const auto& b : all_sigma_invariant_sets(2 * n)) CHECK(lift(fp(b), n) == b);
  CHECK_THROWS_AS(fp(set_of(4, {{1, 2}})), std::invalid_argument);
}

TEST_CASE("projection is equivariant under the simple reflections") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& b : all_sigma_invariant_sets(2 * n))
      for (int j = 0; j < n; ++j) {
        Diagram r = eval_C(word_r(j), n).diagram;
        std::vector<RootC> moved;
        for (const auto& y : fp(b)) moved.push_back(make_root_c(reflect(j, y.coeffs)));
        CHECK(sorted(fp(permute(r, b))) == sorted(moved));
      }
}

TEST_CASE("admissibility of orthogonal type C sets") {
  CHECK_FALSE(is_admissible_C({make_root_c({0, 1}), make_root_c({1, 1})}, 2));
  CHECK(is_admissible_C({make_root_c({1, 0}), make_root_c({1, 2})}, 2));
  CHECK(is_admissible_C({make_root_c({0, 1, 0, 0}), make_root_c({0, 0, 0, 1})}, 4));
  CHECK_THROWS_AS(is_admissible_C({make_root_c({1, 0}), make_root_c({0, 1})}, 2), std::invalid_argument);
  for (int n = 1; n <= 4; ++n)
    for (const auto& b : all_sigma_invariant_sets(2 * n)) CHECK(is_admissible_C(fp(b), n));
}
