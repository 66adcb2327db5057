#include "brauer/roots.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace brauer {

AdmissibleSetA::AdmissibleSetA(int strands, std::vector<RootA> roots)
    : strands_(strands), roots_(std::move(roots)) {
  if (strands < 1) throw std::invalid_argument("strand count must be positive");
  std::vector<char> used(strands + 1, 0);
  for (const auto& r : roots_) {
    if (r.i < 1 || r.j > strands || r.i >= r.j)
      throw std::invalid_argument("root (" + std::to_string(r.i) + "," + std::to_string(r.j) +
                                  ") is not a positive root on " + std::to_string(strands) + " strands");
    if (used[r.i] || used[r.j]) throw std::invalid_argument("roots are not mutually orthogonal");
    used[r.i] = used[r.j] = 1;
  }
  std::sort(roots_.begin(), roots_.end());
}

bool AdmissibleSetA::contains(const RootA& r) const {
  return std::binary_search(roots_.begin(), roots_.end(), r);
}

int AdmissibleSetA::root_at(int d) const {
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (roots_[k].i == d || roots_[k].j == d) return static_cast<int>(k);
  return -1;
}

std::string AdmissibleSetA::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < roots_.size(); ++k)
    os << (k ? "," : "") << "(" << roots_[k].i << "," << roots_[k].j << ")";
  os << "}";
  return os.str();
}

AdmissibleSetA top(const Diagram& d) {
  const int n = d.strands();
  std::vector<RootA> roots;
  for (int x = 0; x < n; ++x)
    if (d.mates()[x] < n && x < d.mates()[x]) roots.push_back({x + 1, d.mates()[x] + 1});
  return {n, std::move(roots)};
}

AdmissibleSetA bottom(const Diagram& d) {
  const int n = d.strands();
  std::vector<RootA> roots;
  for (int x = n; x < 2 * n; ++x)
    if (d.mates()[x] >= n && x < d.mates()[x]) roots.push_back({x - n + 1, d.mates()[x] - n + 1});
  return {n, std::move(roots)};
}

namespace {

RootA normalized(int a, int b) { return a < b ? RootA{a, b} : RootA{b, a}; }

// Applies the transposition (s t) to every index of B.
AdmissibleSetA transpose(const AdmissibleSetA& b, int s, int t) {
  auto swap = [s, t](int x) { return x == s ? t : x == t ? s : x; };
  std::vector<RootA> roots;
  for (const auto& r : b.roots()) roots.push_back(normalized(swap(r.i), swap(r.j)));
  return {b.strands(), std::move(roots)};
}

}  // namespace

AdmissibleSetA act_generator(const Letter& g, const AdmissibleSetA& b) {
  const int n = b.strands();
  if (g.kind == LetterKind::Delta || g.kind == LetterKind::DeltaInverse) return b;
  if (g.index < 1 || g.index > n - 1) throw std::out_of_range("generator index out of range");
  const int i = g.index;
  if (g.kind == LetterKind::Reflection) return transpose(b, i, i + 1);

  const RootA ai = simple_root(i);
  if (b.contains(ai)) return b;
  std::vector<RootA> blocking;
  for (const auto& r : b.roots())
    if (!orthogonal(r, ai)) blocking.push_back(r);
  if (blocking.empty()) {
    std::vector<RootA> roots = b.roots();
    roots.push_back(ai);
    return {n, std::move(roots)};
  }
  // R_beta R_i B must not depend on which non-orthogonal beta is chosen.
  const AdmissibleSetA moved = transpose(b, i, i + 1);
  const AdmissibleSetA result = transpose(moved, blocking.front().i, blocking.front().j);
  for (std::size_t k = 1; k < blocking.size(); ++k) {
    AdmissibleSetA alt = transpose(moved, blocking[k].i, blocking[k].j);
    if (alt != result)
      throw std::logic_error("E_" + std::to_string(i) + " action on " + b.to_string() +
                             " depends on the choice of non-orthogonal root");
  }
  return result;
}

AdmissibleSetA act_word(const WordA& w, const AdmissibleSetA& b) {
  AdmissibleSetA cur = b;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) cur = act_generator(*it, cur);
  return cur;
}

AdmissibleSetA act_left(const Monomial& a, const AdmissibleSetA& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("mismatched strand counts");
  return top(a * Monomial{0, canonical_diagram(b, b)});
}

AdmissibleSetA act_right(const AdmissibleSetA& b, const Monomial& a) { return act_left(op(a), b); }

AdmissibleSetA permute(const Diagram& perm, const AdmissibleSetA& b) {
  const int n = perm.strands();
  if (n != b.strands()) throw std::invalid_argument("mismatched strand counts");
  if (!perm.is_permutation()) throw std::invalid_argument("permute needs a permutation diagram");
  auto image = [&](int y) { return perm.mates()[n + y - 1] + 1; };
  std::vector<RootA> roots;
  for (const auto& r : b.roots()) roots.push_back(normalized(image(r.i), image(r.j)));
  return {n, std::move(roots)};
}

int height_set(const AdmissibleSetA& b) {
  const auto& rs = b.roots();
  int h = 0;
  for (std::size_t x = 0; x < rs.size(); ++x) {
    for (std::size_t y = x + 1; y < rs.size(); ++y) {
      const RootA& p = rs[x];
      const RootA& q = rs[y];
      if ((p.i < q.i && q.i < p.j && p.j < q.j) || (q.i < p.i && p.i < q.j && q.j < p.j)) ++h;
    }
    for (int d = rs[x].i + 1; d < rs[x].j; ++d)
      if (b.root_at(d) < 0) ++h;
  }
  return h;
}

Diagram canonical_diagram(const AdmissibleSetA& b, const AdmissibleSetA& c) {
  if (b.strands() != c.strands()) throw std::invalid_argument("mismatched strand counts");
  if (b.size() != c.size())
    throw std::invalid_argument("top and bottom sets differ in size (" + std::to_string(b.size()) + " vs " +
                                std::to_string(c.size()) + ")");
  const int n = b.strands();
  std::vector<std::pair<int, int>> pairs;
  for (const auto& r : b.roots()) pairs.emplace_back(r.i, r.j);
  for (const auto& r : c.roots()) pairs.emplace_back(n + r.i, n + r.j);
  std::vector<int> free_top, free_bottom;
  for (int d = 1; d <= n; ++d) {
    if (b.root_at(d) < 0) free_top.push_back(d);
    if (c.root_at(d) < 0) free_bottom.push_back(d);
  }
  for (std::size_t k = 0; k < free_top.size(); ++k) pairs.emplace_back(free_top[k], n + free_bottom[k]);
  return Diagram::from_pairs(n, pairs);
}

Monomial E_product(const AdmissibleSetA& b) { return {0, canonical_diagram(b, b)}; }

Monomial E_hat(const AdmissibleSetA& b) {
  return {-static_cast<int>(b.size()), canonical_diagram(b, b)};
}

WordA E_root_word(const RootA& r) {
  WordA w;
  for (int k = r.j - 1; k > r.i; --k) w.letters.push_back({LetterKind::Reflection, k});
  w.letters.push_back({LetterKind::Quasi, r.i});
  for (int k = r.i + 1; k < r.j; ++k) w.letters.push_back({LetterKind::Reflection, k});
  return w;
}

RootA sigma(const RootA& r, int strands) { return {strands + 1 - r.j, strands + 1 - r.i}; }

AdmissibleSetA sigma(const AdmissibleSetA& b) {
  std::vector<RootA> roots;
  for (const auto& r : b.roots()) roots.push_back(sigma(r, b.strands()));
  return {b.strands(), std::move(roots)};
}

bool is_sigma_invariant(const AdmissibleSetA& b) { return sigma(b) == b; }

Report action_suite(int strands) {
  Report rep("admissible set actions on " + std::to_string(strands) + " strands");
  const auto sets = all_admissible_sets(strands);
  const std::string in = "N=" + std::to_string(strands);
  for (int i = 1; i < strands; ++i)
    for (LetterKind kind : {LetterKind::Reflection, LetterKind::Quasi}) {
      const Letter g{kind, i};
      const Monomial a{0, kind == LetterKind::Reflection ? generator_R(strands, i) : generator_E(strands, i)};
      const Monomial sa = sigma(a);
      const std::string name = (kind == LetterKind::Reflection ? "R" : "E") + std::to_string(i);
      std::size_t agree = 0, dual = 0, equivariant = 0;
      for (const auto& b : sets) {
        const AdmissibleSetA cased = act_generator(g, b);
        agree += cased == act_left(a, b) ? 1 : 0;
        dual += bottom(Monomial{0, canonical_diagram(b, b)} * a) == act_right(b, a) ? 1 : 0;
        equivariant += act_left(sa, sigma(b)) == sigma(cased) ? 1 : 0;
      }
      auto line = [&](const std::string& what, std::size_t got) {
        rep.add(what, in + ",g=" + name, got == sets.size(),
                std::to_string(got) + " of " + std::to_string(sets.size()));
      };
      line("case-based action = completion action", agree);
      line("B a = op(a) B read on bottoms", dual);
      line("sigma(a) sigma(B) = sigma(a B)", equivariant);
    }
  return rep;
}

namespace {

void admissible_rec(int strands, int d, std::vector<char>& used, std::vector<RootA>& cur,
                    std::vector<AdmissibleSetA>& out) {
  while (d <= strands && used[d]) ++d;
  if (d > strands) {
    out.emplace_back(strands, cur);
    return;
  }
  admissible_rec(strands, d + 1, used, cur, out);
  used[d] = 1;
  for (int e = d + 1; e <= strands; ++e) {
    if (used[e]) continue;
    used[e] = 1;
    cur.push_back({d, e});
    admissible_rec(strands, d + 1, used, cur, out);
    cur.pop_back();
    used[e] = 0;
  }
  used[d] = 0;
}

}  // namespace

std::vector<AdmissibleSetA> all_admissible_sets(int strands) {
  if (strands < 1 || strands > 16) throw std::length_error("admissible set enumeration bound exceeded");
  std::vector<char> used(strands + 2, 0);
  std::vector<RootA> cur;
  std::vector<AdmissibleSetA> out;
  admissible_rec(strands, 1, used, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AdmissibleSetA> all_sigma_invariant_sets(int strands) {
  std::vector<AdmissibleSetA> out;
  for (auto& b : all_admissible_sets(strands))
    if (is_sigma_invariant(b)) out.push_back(std::move(b));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

int gram2(int a, int b) {
  if (a == b) return a == 0 ? 4 : 2;
  if (std::abs(a - b) != 1) return 0;
  return std::min(a, b) == 0 ? -2 : -1;
}

void require_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
}

}  // namespace

std::string to_string(const RootC& r) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < r.coeffs.size(); ++k) {
    if (r.coeffs[k] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (r.coeffs[k] != 1) os << r.coeffs[k];
    os << "b" << k;
  }
  if (first) os << "0";
  return os.str();
}

RootC simple_root_c(int n, int j) {
  require_rank(n);
  if (j < 0 || j >= n) throw std::out_of_range("simple root index out of range");
  std::vector<int> c(n, 0);
  c[j] = 1;
  return {std::move(c), j == 0 ? RootNorm::Long : RootNorm::Short};
}

int inner2(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("mismatched root ranks");
  int s = 0;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < y.size(); ++b) s += x[a] * y[b] * gram2(static_cast<int>(a), static_cast<int>(b));
  return s;
}

std::vector<int> reflect(int j, const std::vector<int>& x) {
  const int n = static_cast<int>(x.size());
  if (j < 0 || j >= n) throw std::out_of_range("reflection index out of range");
  int g = 0;
  for (int a = 0; a < n; ++a) g += x[a] * gram2(a, j);
  const int pairing = 2 * g / gram2(j, j);
  std::vector<int> out = x;
  out[j] -= pairing;
  return out;
}

std::vector<int> apply_reflections(const std::vector<Letter>& letters, std::vector<int> x) {
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (it->kind != LetterKind::Reflection) throw std::invalid_argument("only reflections act on roots");
    x = reflect(it->index, x);
  }
  return x;
}

RootC make_root_c(std::vector<int> x) {
  bool nonpos = std::all_of(x.begin(), x.end(), [](int v) { return v <= 0; });
  if (nonpos)
    for (int& v : x) v = -v;
  int norm = inner2(x, x);
  if (std::any_of(x.begin(), x.end(), [](int v) { return v < 0; }) || (norm != 2 && norm != 4))
    throw std::invalid_argument("coordinate vector is not a root");
  return {std::move(x), norm == 4 ? RootNorm::Long : RootNorm::Short};
}

RootC fp(const RootA& r, int n) {
  require_rank(n);
  if (r.i < 1 || r.j > 2 * n || r.i >= r.j) throw std::invalid_argument("root out of range");
  std::vector<int> c(n, 0);
  auto alpha = [&](int k) { return r.i <= k && k < r.j ? 1 : 0; };
  c[0] = alpha(n);
  for (int i = 1; i < n; ++i) c[i] = alpha(n - i) + alpha(n + i);
  return {std::move(c), r.i + r.j == 2 * n + 1 ? RootNorm::Long : RootNorm::Short};
}

std::vector<RootC> fp(const AdmissibleSetA& b) {
  if (b.strands() % 2 != 0) throw std::invalid_argument("projection needs an even strand count");
  if (!is_sigma_invariant(b)) throw std::invalid_argument("set " + b.to_string() + " is not sigma-invariant");
  std::set<RootC> out;
  for (const auto& r : b.roots()) out.insert(fp(r, b.strands() / 2));
  return {out.begin(), out.end()};
}

std::vector<RootC> positive_roots_c(int n) {
  std::set<RootC> out;
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = i + 1; j <= 2 * n; ++j) out.insert(fp(RootA{i, j}, n));
  return {out.begin(), out.end()};
}

std::vector<RootA> preimage(const std::vector<RootC>& y, int n) {
  std::vector<RootA> out;
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = i + 1; j <= 2 * n; ++j) {
      RootC image = fp(RootA{i, j}, n);
      if (std::find(y.begin(), y.end(), image) != y.end()) out.push_back({i, j});
    }
  return out;
}

namespace {

bool pairwise_disjoint(const std::vector<RootA>& roots) {
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b)
      if (!orthogonal(roots[a], roots[b])) return false;
  return true;
}

}  // namespace

AdmissibleSetA lift(const std::vector<RootC>& y, int n) {
  std::vector<RootA> x = preimage(y, n);
  if (!pairwise_disjoint(x)) throw std::invalid_argument("preimage is not pairwise orthogonal");
  return {2 * n, std::move(x)};
}

bool is_admissible_C(const std::vector<RootC>& y, int n) {
  require_rank(n);
  for (const auto& r : y)
    if (static_cast<int>(r.coeffs.size()) != n) throw std::invalid_argument("root rank mismatch");
  for (std::size_t a = 0; a < y.size(); ++a)
    for (std::size_t b = a + 1; b < y.size(); ++b)
      if (inner2(y[a].coeffs, y[b].coeffs) != 0)
        throw std::invalid_argument("roots " + to_string(y[a]) + " and " + to_string(y[b]) + " are not orthogonal");
  return pairwise_disjoint(preimage(y, n));
}

}  // namespace brauer
