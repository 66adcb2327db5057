#include "brauer/typec.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace brauer {

namespace {

void require_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
}

Letter parse_token_c(std::string_view tok) {
  while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
  while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
  if (tok == "d") return {LetterKind::Delta, 0};
  if (tok == "D") return {LetterKind::DeltaInverse, 0};
  if (tok.size() >= 2 && (tok[0] == 'r' || tok[0] == 'e')) {
    int v = 0;
    for (char c : tok.substr(1)) {
      if (c < '0' || c > '9') throw std::invalid_argument("invalid token '" + std::string(tok) + "'");
      v = v * 10 + (c - '0');
      if (v > 100000) throw std::invalid_argument("index too large in '" + std::string(tok) + "'");
    }
    return {tok[0] == 'r' ? LetterKind::Reflection : LetterKind::Quasi, v};
  }
  throw std::invalid_argument("invalid token '" + std::string(tok) + "'");
}

std::string inst(int i) { return "i=" + std::to_string(i); }
std::string inst(int i, int j) { return "i=" + std::to_string(i) + ",j=" + std::to_string(j); }

BigInt factorial(int k) {
  BigInt r = 1;
  for (int t = 2; t <= k; ++t) r *= t;
  return r;
}

}  // namespace

WordC operator*(WordC a, const WordC& b) {
  a.letters.insert(a.letters.end(), b.letters.begin(), b.letters.end());
  return a;
}

WordC word_r(int i) { return {{{LetterKind::Reflection, i}}}; }
WordC word_e(int i) { return {{{LetterKind::Quasi, i}}}; }

WordC word_delta(int power) {
  WordC w;
  for (int k = 0; k < std::abs(power); ++k)
    w.letters.push_back({power > 0 ? LetterKind::Delta : LetterKind::DeltaInverse, 0});
  return w;
}

WordC reversed(const WordC& w) { return {{w.letters.rbegin(), w.letters.rend()}}; }

WordC parse_word_c(std::string_view s) {
  WordC w;
  if (s.find_first_not_of(' ') == std::string_view::npos) return w;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = s.find(',', start);
    w.letters.push_back(parse_token_c(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return w;
}

WordC word_c_from_tokens(const std::vector<std::string>& toks) {
  WordC w;
  for (const auto& t : toks) w.letters.push_back(parse_token_c(t));
  return w;
}

std::vector<std::string> tokens(const WordC& w) {
  std::vector<std::string> out;
  for (const auto& l : w.letters) {
    switch (l.kind) {
      case LetterKind::Reflection: out.push_back("r" + std::to_string(l.index)); break;
      case LetterKind::Quasi: out.push_back("e" + std::to_string(l.index)); break;
      case LetterKind::Delta: out.push_back("d"); break;
      case LetterKind::DeltaInverse: out.push_back("D"); break;
    }
  }
  return out;
}

std::string to_string(const WordC& w) {
  if (w.letters.empty()) return "1";
  std::string s;
  for (const auto& t : tokens(w)) s += t;
  return s;
}

WordA phi_word(const WordC& w, int n) {
  require_rank(n);
  WordA out;
  for (const auto& l : w.letters) {
    if (l.kind == LetterKind::Delta || l.kind == LetterKind::DeltaInverse) {
      out.letters.push_back(l);
      continue;
    }
    if (l.index < 0 || l.index >= n)
      throw std::out_of_range("generator index " + std::to_string(l.index) + " out of range for rank " +
                              std::to_string(n));
    if (l.index == 0) {
      out.letters.push_back({l.kind, n});
    } else {
      out.letters.push_back({l.kind, n - l.index});
      out.letters.push_back({l.kind, n + l.index});
    }
  }
  return out;
}

Monomial eval_C(const WordC& w, int n) { return evaluate_word(phi_word(w, n), 2 * n); }

void check_relation(Report& report, int n, const std::string& name, const std::string& instance,
                    const WordC& lhs, const WordC& rhs) {
  Monomial l = eval_C(lhs, n);
  Monomial r = eval_C(rhs, n);
  report.add(name, instance, l == r, l == r ? "" : to_string(l) + " != " + to_string(r));
}

// ---------------------------------------------------------------------------

WordC y_word(int i) {
  if (i < 1) throw std::out_of_range("y_i needs i >= 1");
  WordC w;
  for (int k = i - 1; k >= 1; --k) w.letters.push_back({LetterKind::Reflection, k});
  w.letters.push_back({LetterKind::Reflection, 0});
  for (int k = 1; k <= i - 1; ++k) w.letters.push_back({LetterKind::Reflection, k});
  return w;
}

WordC z_word(int i) {
  WordC w = y_word(i);
  w.letters[i - 1].kind = LetterKind::Quasi;
  return w;
}

WordC b_word(int i) {
  if (i < 0) throw std::out_of_range("b_i needs i >= 0");
  WordC w;
  for (int k = 1; k <= i; ++k) w = w * z_word(k);
  return w;
}

WordC e_strip(int i, int p) {
  if (p < 0 || p > i || (i - p) % 2 != 0)
    throw std::invalid_argument("need 0 <= p <= i with i - p even (i=" + std::to_string(i) +
                                ", p=" + std::to_string(p) + ")");
  WordC w;
  for (int k = p + 1; k <= i - 1; k += 2) w.letters.push_back({LetterKind::Quasi, k});
  return w;
}

WordC bpip_word(int p, int i, int pp) { return e_strip(i, p) * b_word(i) * e_strip(i, pp); }

AdmissibleSetA B_i_set(int n, int i) {
  require_rank(n);
  if (i < 0 || i > n) throw std::out_of_range("i out of range");
  std::vector<RootA> roots;
  for (int j = 1; j <= i; ++j) roots.push_back({n + 1 - j, n + j});
  return {2 * n, std::move(roots)};
}

AdmissibleSetA B_set(int n, int i, int p) {
  WordC strip = e_strip(i, p);
  if (i > n) throw std::out_of_range("i out of range");
  return act_word(phi_word(strip, n), B_i_set(n, i));
}

std::vector<int> valid_p(int i) {
  std::vector<int> out;
  for (int p = i % 2; p <= i; p += 2) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------------------

Report relation_suite_C(int n) {
  if (n < 2) throw std::invalid_argument("relation suite needs rank >= 2");
  Report rep("type C relations, rank " + std::to_string(n));
  auto r = word_r;
  auto e = word_e;
  const WordC d = word_delta(1);
  const WordC d2 = word_delta(2);
  auto chk = [&](const std::string& name, const std::string& in, const WordC& a, const WordC& b) {
    check_relation(rep, n, name, in, a, b);
  };

  for (int i = 0; i < n; ++i) {
    chk("r_i r_i = 1", inst(i), r(i) * r(i), {});
    chk("r_i e_i = e_i", inst(i), r(i) * e(i), e(i));
    chk("e_i r_i = e_i", inst(i), e(i) * r(i), e(i));
    if (i > 0) chk("e_i e_i = d^2 e_i", inst(i), e(i) * e(i), d2 * e(i));
  }
  chk("e_0 e_0 = d e_0", "", e(0) * e(0), d * e(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (std::abs(i - j) >= 2) {
        chk("r_i r_j = r_j r_i", inst(i, j), r(i) * r(j), r(j) * r(i));
        chk("e_i r_j = r_j e_i", inst(i, j), e(i) * r(j), r(j) * e(i));
        chk("e_i e_j = e_j e_i", inst(i, j), e(i) * e(j), e(j) * e(i));
      } else if (std::abs(i - j) == 1 && i > 0 && j > 0) {
        chk("r_i r_j r_i = r_j r_i r_j", inst(i, j), r(i) * r(j) * r(i), r(j) * r(i) * r(j));
        chk("r_j r_i e_j = e_i e_j", inst(i, j), r(j) * r(i) * e(j), e(i) * e(j));
        chk("r_i e_j r_i = r_j e_i r_j", inst(i, j), r(i) * e(j) * r(i), r(j) * e(i) * r(j));
      }
    }
  chk("r_1 r_0 r_1 r_0 = r_0 r_1 r_0 r_1", "", r(1) * r(0) * r(1) * r(0), r(0) * r(1) * r(0) * r(1));
  chk("r_1 r_0 e_1 = r_0 e_1", "", r(1) * r(0) * e(1), r(0) * e(1));
  chk("r_1 e_0 r_1 e_0 = e_0 e_1 e_0", "", r(1) * e(0) * r(1) * e(0), e(0) * e(1) * e(0));
  chk("r_1 r_0 r_1 e_0 = e_0 r_1 r_0 r_1", "", r(1) * r(0) * r(1) * e(0), e(0) * r(1) * r(0) * r(1));
  chk("e_1 r_0 e_1 = d e_1", "", e(1) * r(0) * e(1), d * e(1));
  chk("e_1 e_0 e_1 = d e_1", "", e(1) * e(0) * e(1), d * e(1));
  chk("e_1 r_0 r_1 = e_1 r_0", "", e(1) * r(0) * r(1), e(1) * r(0));
  chk("e_1 e_0 r_1 = e_1 e_0", "", e(1) * e(0) * r(1), e(1) * e(0));

  chk("r_1 e_0 e_1 = e_0 e_1", "", r(1) * e(0) * e(1), e(0) * e(1));
  chk("e_0 e_1 e_0 = e_0 r_1 e_0", "", e(0) * e(1) * e(0), e(0) * r(1) * e(0));
  chk("e_1 r_0 r_1 e_0 = e_1 e_0", "", e(1) * r(0) * r(1) * e(0), e(1) * e(0));
  chk("r_0 r_1 e_0 r_1 = r_1 e_0 r_1 r_0", "", r(0) * r(1) * e(0) * r(1), r(1) * e(0) * r(1) * r(0));
  chk("e_0 r_1 e_0 r_1 = e_0 e_1 e_0", "", e(0) * r(1) * e(0) * r(1), e(0) * e(1) * e(0));

  for (int i = 2; i <= n - 1; ++i) {
    const WordC zi = z_word(i), zi1 = z_word(i + 1), zim = z_word(i - 1);
    chk("e_i z_{i+1} = e_i z_i", inst(i), e(i) * zi1, e(i) * zi);
    chk("e_{i-1} z_{i+1} z_i z_{i-1} = r_i r_{i-1} e_i z_i z_{i+1} z_{i-1}", inst(i), e(i - 1) * zi1 * zi * zim,
        r(i) * r(i - 1) * e(i) * zi * zi1 * zim);
    chk("e_i z_{i+1} z_i e_i = d^2 e_i", inst(i), e(i) * zi1 * zi * e(i), d2 * e(i));
  }

  for (int i = 1; i <= n; ++i)
    for (int j = 0; j <= i - 2; ++j) {
      chk("y_i r_j = r_j y_i", inst(i, j), y_word(i) * r(j), r(j) * y_word(i));
      chk("y_i e_j = e_j y_i", inst(i, j), y_word(i) * e(j), e(j) * y_word(i));
      chk("z_i r_j = r_j z_i", inst(i, j), z_word(i) * r(j), r(j) * z_word(i));
      chk("z_i e_j = e_j z_i", inst(i, j), z_word(i) * e(j), e(j) * z_word(i));
    }
  return rep;
}

// ---------------------------------------------------------------------------

WeylGroup WeylGroup::build(int n, int bound) {
  require_rank(n);
  if (n > bound)
    throw std::length_error("Weyl group bound exceeded: " + std::to_string(n) + " > " + std::to_string(bound));
  WeylGroup g;
  g.n_ = n;
  std::vector<Diagram> gens;
  for (int j = 0; j < n; ++j) gens.push_back(eval_C(word_r(j), n).diagram);
  g.elements_.push_back({Diagram::identity(2 * n), {}});
  g.index_.emplace(g.elements_[0].diagram, 0);
  for (std::size_t at = 0; at < g.elements_.size(); ++at) {
    for (int j = 0; j < n; ++j) {
      Monomial m = Monomial{0, g.elements_[at].diagram} * Monomial{0, gens[j]};
      if (g.index_.contains(m.diagram)) continue;
      WordC w = g.elements_[at].word * word_r(j);
      g.index_.emplace(m.diagram, static_cast<int>(g.elements_.size()));
      g.elements_.push_back({m.diagram, std::move(w)});
    }
  }
  return g;
}

int WeylGroup::find(const Diagram& d) const {
  auto it = index_.find(d);
  return it == index_.end() ? -1 : it->second;
}

int WeylGroup::multiply(int a, int b) const {
  Monomial m = Monomial{0, elements_.at(a).diagram} * Monomial{0, elements_.at(b).diagram};
  return find(m.diagram);
}

int WeylGroup::inverse(int a) const { return find(op(elements_.at(a).diagram)); }

std::vector<int> WeylGroup::closure(const std::vector<int>& generators) const {
  std::vector<int> out{0};
  std::vector<char> seen(elements_.size(), 0);
  seen[0] = 1;
  for (std::size_t at = 0; at < out.size(); ++at)
    for (int g : generators) {
      int x = multiply(out[at], g);
      if (!seen[x]) {
        seen[x] = 1;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

int WeylGroup::element_of(const WordC& w) const {
  int idx = find(eval_C(w, n_).diagram);
  if (idx < 0) throw std::invalid_argument("word " + to_string(w) + " is not a Weyl group element");
  return idx;
}

BigInt orbit_size_formula(int n, int i, int p) {
  if (p < 0 || p > i || i > n || (i - p) % 2 != 0) throw std::invalid_argument("invalid (i, p)");
  return factorial(n) / (factorial(p) * factorial((i - p) / 2) * factorial(n - i));
}

CosetData stabilizer_and_cosets(const WeylGroup& w, int i, int p) {
  const int n = w.rank();
  if (i < 0 || i > n) throw std::out_of_range("i out of range");
  if (p < 0 || p > i || (i - p) % 2 != 0) throw std::invalid_argument("invalid (i, p)");
  const int q = (i - p) / 2;
  CosetData c;
  c.i = i;
  c.p = p;
  for (int j = 0; j < p; ++j) c.a_generators.push_back(word_r(j));
  for (int k = 1; k <= q; ++k) c.a_generators.push_back(word_r(p + 2 * k - 1));
  if (q >= 1) c.a_generators.push_back(y_word(p + 1) * word_r(p + 1) * y_word(p + 1));
  for (int k = 1; k <= q - 1; ++k)
    c.a_generators.push_back(word_r(p + 2 * k) * word_r(p + 2 * k - 1) * word_r(p + 2 * k + 1) *
                             word_r(p + 2 * k));
  if (i + 1 <= n) c.l_generators.push_back(y_word(i + 1));
  for (int j = i + 1; j <= n - 1; ++j) c.l_generators.push_back(word_r(j));

  std::vector<int> ag, lg;
  for (const auto& g : c.a_generators) ag.push_back(w.element_of(g));
  for (const auto& g : c.l_generators) lg.push_back(w.element_of(g));
  c.a_elements = w.closure(ag);
  c.l_elements = w.closure(lg);
  std::vector<int> ng = ag;
  ng.insert(ng.end(), lg.begin(), lg.end());
  c.n_elements = w.closure(ng);

  const AdmissibleSetA base = B_set(n, i, p);
  std::set<AdmissibleSetA> seen;
  for (int idx = 0; idx < static_cast<int>(w.size()); ++idx) {
    AdmissibleSetA img = permute(w[idx].diagram, base);
    if (img == base) c.stabilizer.push_back(idx);
    if (seen.insert(img).second) {
      c.d_reps.push_back(idx);
      c.orbit.push_back(std::move(img));
    }
  }
  return c;
}

// ---------------------------------------------------------------------------

NormalFormBasis NormalFormBasis::build(const WeylGroup& w) {
  const int n = w.rank();
  if (n > 4) throw std::length_error("normal form enumeration is limited to rank 4");
  NormalFormBasis nb;
  nb.group_ = &w;
  for (int i = 0; i <= n; ++i)
    for (int p : valid_p(i)) nb.cosets_.emplace(std::pair{i, p}, stabilizer_and_cosets(w, i, p));

  for (int i = 0; i <= n; ++i) {
    const auto& ls = nb.cosets_.at({i, i % 2}).l_elements;
    for (int p : valid_p(i)) {
      const auto& du = nb.cosets_.at({i, p}).d_reps;
      for (int pp : valid_p(i)) {
        const auto& dw = nb.cosets_.at({i, pp}).d_reps;
        const Monomial b = eval_C(bpip_word(p, i, pp), n);
        for (int u : du) {
          const Monomial ub = Monomial{0, w[u].diagram} * b;
          for (int v : ls) {
            const Monomial ubv = ub * Monomial{0, w[v].diagram};
            for (int wi : dw) {
              Monomial m = ubv * Monomial{0, op(w[wi].diagram)};
              NormalForm nf{-m.delta_exp, i, p, pp, u, v, wi};
              if (!is_symmetric(m.diagram))
                throw std::logic_error("normal form produced a non-symmetric diagram");
              if (m.diagram.top_horizontal_count() != i)
                throw std::logic_error("normal form diagram has the wrong number of top strands");
              auto [it, fresh] = nb.index_.emplace(m.diagram, static_cast<int>(nb.entries_.size()));
              if (!fresh) throw std::logic_error("two normal forms give the diagram " + m.diagram.to_string());
              nb.entries_.push_back({nf, m.diagram});
            }
          }
        }
      }
    }
  }
  return nb;
}

const CosetData& NormalFormBasis::cosets(int i, int p) const { return cosets_.at({i, p}); }

const BasisEntry* NormalFormBasis::find(const Diagram& d) const {
  auto it = index_.find(d);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

Monomial NormalFormBasis::evaluate(const NormalForm& nf) const {
  const WeylGroup& w = *group_;
  Monomial m = Monomial{nf.k, w[nf.u].diagram} * eval_C(bpip_word(nf.p, nf.i, nf.pp), w.rank());
  return m * Monomial{0, w[nf.v].diagram} * Monomial{0, op(w[nf.w].diagram)};
}

std::size_t NormalFormBasis::layer_size(int i) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [i](const BasisEntry& e) { return e.nf.i == i; }));
}

// ---------------------------------------------------------------------------

BigInt count_recursion(int k) {
  if (k < 0) throw std::invalid_argument("index must be non-negative");
  BigInt prev = 1, cur = 1;
  for (int t = 2; t <= k; ++t) {
    BigInt next = cur + 2 * (t - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

BigInt count_closed(int n) {
  if (n < 0) throw std::invalid_argument("rank must be non-negative");
  BigInt total = 0;
  for (int i = 0; i <= n; ++i) {
    BigInt inner = 0;
    for (int p : valid_p(i)) inner += orbit_size_formula(n, i, p);
    BigInt weyl = factorial(n - i);
    for (int t = 0; t < n - i; ++t) weyl *= 2;
    total += inner * inner * weyl;
  }
  return total;
}

BigInt count_from_cosets(const WeylGroup& w) {
  BigInt total = 0;
  for (int i = 0; i <= w.rank(); ++i) {
    BigInt orbits = 0;
    std::size_t l = 0;
    for (int p : valid_p(i)) {
      CosetData c = stabilizer_and_cosets(w, i, p);
      orbits += c.d_reps.size();
      l = c.l_elements.size();
    }
    total += orbits * orbits * l;
  }
  return total;
}

// ---------------------------------------------------------------------------

namespace {

Monomial conjugate_root_element(const RootC& beta, const WeylGroup& w, LetterKind kind) {
  const int n = w.rank();
  if (static_cast<int>(beta.coeffs.size()) != n) throw std::invalid_argument("root rank mismatch");
  const int j = beta.norm == RootNorm::Long ? 0 : 1;
  if (j >= n) throw std::invalid_argument("rank 1 has no short roots");
  const RootC base = simple_root_c(n, j);
  std::vector<int> neg = beta.coeffs;
  for (int& x : neg) x = -x;
  const Diagram gen = eval_C(WordC{{{kind, j}}}, n).diagram;
  const int gen_exp = eval_C(WordC{{{kind, j}}}, n).delta_exp;
  std::optional<Monomial> result;
  for (const auto& el : w.elements()) {
    std::vector<int> img = apply_reflections(el.word.letters, base.coeffs);
    if (img != beta.coeffs && img != neg) continue;
    Monomial m = Monomial{0, el.diagram} * Monomial{gen_exp, gen} * Monomial{0, op(el.diagram)};
    if (!result) {
      result = m;
    } else if (*result != m) {
      throw std::logic_error("root element for " + to_string(beta) + " depends on the conjugating element");
    }
  }
  if (!result) throw std::logic_error("no Weyl group element reaches " + to_string(beta));
  return *result;
}

}  // namespace

Monomial e_root(const RootC& beta, const WeylGroup& w) {
  return conjugate_root_element(beta, w, LetterKind::Quasi);
}

Monomial r_root(const RootC& beta, const WeylGroup& w) {
  return conjugate_root_element(beta, w, LetterKind::Reflection);
}

namespace {

EbWitness rewrite_with(const Monomial& eb, int p, int i, int pp, const NormalFormBasis& basis) {
  const int n = basis.group().rank();
  Monomial prod = eb * eval_C(bpip_word(p, i, pp), n);
  const BasisEntry* e = basis.find(prod.diagram);
  if (!e) throw std::logic_error("e_beta b_{p,i,p'} is not in the normal form basis");
  const int h = e->nf.i;
  if (h < i || h > i + 2) throw std::logic_error("layer jumped from " + std::to_string(i) + " to " + std::to_string(h));
  if (h == i && (e->nf.w != 0 || e->nf.pp != pp))
    throw std::logic_error("same-layer product does not keep the right factor");
  return {prod.delta_exp + e->nf.k, e->nf};
}

}  // namespace

EbWitness rewrite_eb(const RootC& beta, int p, int i, int pp, const NormalFormBasis& basis) {
  return rewrite_with(e_root(beta, basis.group()), p, i, pp, basis);
}

std::vector<Diagram> diagram_closure(const std::vector<Diagram>& generators, int strands) {
  std::vector<Diagram> out{Diagram::identity(strands)};
  std::unordered_set<Diagram, DiagramHash> seen(out.begin(), out.end());
  for (std::size_t at = 0; at < out.size(); ++at)
    for (const auto& g : generators) {
      if (g.strands() != strands) throw std::invalid_argument("mismatched strand counts");
      Diagram d = (Monomial{0, out[at]} * Monomial{0, g}).diagram;
      if (seen.insert(d).second) out.push_back(d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

Report root_pair_suite(const WeylGroup& w) {
  const int n = w.rank();
  Report rep("root element identities, rank " + std::to_string(n));
  const auto roots = positive_roots_c(n);
  std::vector<Monomial> e, r;
  for (const auto& b : roots) {
    e.push_back(e_root(b, w));
    r.push_back(r_root(b, w));
  }
  const Monomial d{1, Diagram::identity(2 * n)};
  auto expect = [&](const std::string& name, const std::string& in, const Monomial& a, const Monomial& b) {
    rep.add(name, in, a == b, a == b ? "" : to_string(a) + " != " + to_string(b));
  };

  for (std::size_t x = 0; x < roots.size(); ++x) {
    const std::string in = "b=" + to_string(roots[x]);
    expect("e_b r_b = e_b", in, e[x] * r[x], e[x]);
    expect("r_b e_b = e_b", in, r[x] * e[x], e[x]);
    const Monomial sq = roots[x].norm == RootNorm::Long ? d * e[x] : d * d * e[x];
    expect(roots[x].norm == RootNorm::Long ? "e_b e_b = d e_b" : "e_b e_b = d^2 e_b", in, e[x] * e[x], sq);
    const Monomial fromA = evaluate_word(
        [&] {
          WordA word;
          for (const auto& a : preimage({roots[x]}, n)) word = word * E_root_word(a);
          return word;
        }(),
        2 * n);
    expect("phi(e_b) = product of E_a over the preimage of b", in, e[x], fromA);
  }

  for (std::size_t x = 0; x < roots.size(); ++x)
    for (std::size_t y = 0; y < roots.size(); ++y) {
      if (x == y) continue;
      const RootC& b = roots[x];
      const RootC& g = roots[y];
      const std::string in = "b=" + to_string(b) + ",g=" + to_string(g);
      const int ip = inner2(b.coeffs, g.coeffs);
      const bool bs = b.norm == RootNorm::Short, gs = g.norm == RootNorm::Short;
      const Monomial &eb = e[x], &eg = e[y], &rb = r[x], &rg = r[y];
      if (ip != 0 && bs && gs) {
        expect("e_b r_g e_b = e_b", in, eb * rg * eb, eb);
        expect("r_b r_g e_b = e_g e_b", in, rb * rg * eb, eg * eb);
        expect("e_g r_b r_g = e_g e_b", in, eg * rb * rg, eg * eb);
        expect("e_b e_g e_b = e_b", in, eb * eg * eb, eb);
      } else if (ip != 0 && bs && !gs) {
        // Two-generator relations with 1 -> b and 0 -> g.
        expect("r_1 r_0 r_1 r_0 = r_0 r_1 r_0 r_1", in, rb * rg * rb * rg, rg * rb * rg * rb);
        expect("r_1 r_0 e_1 = r_0 e_1", in, rb * rg * eb, rg * eb);
        expect("r_1 e_0 r_1 e_0 = e_0 e_1 e_0", in, rb * eg * rb * eg, eg * eb * eg);
        expect("r_1 r_0 r_1 e_0 = e_0 r_1 r_0 r_1", in, rb * rg * rb * eg, eg * rb * rg * rb);
        expect("e_1 r_0 e_1 = d e_1", in, eb * rg * eb, d * eb);
        expect("e_1 e_0 e_1 = d e_1", in, eb * eg * eb, d * eb);
        expect("e_1 r_0 r_1 = e_1 r_0", in, eb * rg * rb, eb * rg);
        expect("e_1 e_0 r_1 = e_1 e_0", in, eb * eg * rb, eb * eg);
        expect("r_1 e_0 e_1 = e_0 e_1", in, rb * eg * eb, eg * eb);
        expect("e_0 e_1 e_0 = e_0 r_1 e_0", in, eg * eb * eg, eg * rb * eg);
        expect("e_1 r_0 r_1 e_0 = e_1 e_0", in, eb * rg * rb * eg, eb * eg);
        expect("r_0 r_1 e_0 r_1 = r_1 e_0 r_1 r_0", in, rg * rb * eg * rb, rb * eg * rb * rg);
        expect("e_0 r_1 e_0 r_1 = e_0 e_1 e_0", in, eg * rb * eg * rb, eg * eb * eg);
      } else if (ip == 0 && x < y) {
        std::optional<std::size_t> alpha;
        if (bs && gs)
          for (std::size_t a = 0; a < roots.size(); ++a) {
            if (roots[a].norm != RootNorm::Long) continue;
            bool plus = true, minus = true;
            for (int t = 0; t < n; ++t) {
              plus = plus && b.coeffs[t] == g.coeffs[t] + roots[a].coeffs[t];
              minus = minus && b.coeffs[t] == g.coeffs[t] - roots[a].coeffs[t];
            }
            if (plus || minus) alpha = a;
          }
        if (alpha) {
          const Monomial& ra = r[*alpha];
          bool ok = eb * eg == d * ra * eg || eg * eb == d * ra * eb;
          rep.add("e_b e_g = d r_a e_g or e_g e_b = d r_a e_b", in, ok);
          rep.add("e_b e_g != e_g e_b", in, eb * eg != eg * eb);
        } else {
          expect("e_b e_g = e_g e_b", in, eb * eg, eg * eb);
        }
      }
    }
  return rep;
}

Report orbit_suite(const WeylGroup& w) {
  const int n = w.rank();
  Report rep("orbits and stabilizers, rank " + std::to_string(n));
  auto pow2 = [](int k) { return BigInt(1) << k; };
  std::map<AdmissibleSetA, std::pair<int, int>> owner;
  for (int i = 0; i <= n; ++i)
    for (int p : valid_p(i)) {
      const CosetData c = stabilizer_and_cosets(w, i, p);
      const int q = (i - p) / 2;
      const std::string in = "i=" + std::to_string(i) + ",p=" + std::to_string(p);
      const BigInt expect_orbit = orbit_size_formula(n, i, p);
      rep.add("|orbit of B_{i,p}| = n!/(p! q! (n-i)!)", in, BigInt(c.orbit.size()) == expect_orbit,
              std::to_string(c.orbit.size()) + " vs " + expect_orbit.str());
      const BigInt expect_a = pow2(i) * factorial(p) * factorial(q);
      rep.add("|A_{i,p}| = 2^i p! q!", in, BigInt(c.a_elements.size()) == expect_a,
              std::to_string(c.a_elements.size()) + " vs " + expect_a.str());
      const BigInt expect_l = pow2(n - i) * factorial(n - i);
      rep.add("|L_i| = 2^(n-i) (n-i)!", in, BigInt(c.l_elements.size()) == expect_l,
              std::to_string(c.l_elements.size()) + " vs " + expect_l.str());
      rep.add("N_{i,p} is the stabilizer of B_{i,p}", in, c.n_elements == c.stabilizer);
      rep.add("|A_{i,p}| |L_i| = |N_{i,p}|", in, c.a_elements.size() * c.l_elements.size() == c.n_elements.size());
      rep.add("|A_{i,p}| |L_i| |D_{i,p}| = |W|", in,
              c.a_elements.size() * c.l_elements.size() * c.d_reps.size() == w.size());
      bool ok = true;
      for (std::size_t k = 0; k < c.d_reps.size(); ++k)
        ok = ok && permute(w[c.d_reps[k]].diagram, B_set(n, i, p)) == c.orbit[k];
      rep.add("D_{i,p} representatives reach their orbit points", in, ok);
      for (const auto& b : c.orbit) owner.emplace(b, std::pair{i, p});
    }
  const auto all = all_sigma_invariant_sets(2 * n);
  bool covered = owner.size() == all.size();
  bool invariants = true;
  for (const auto& b : all) {
    auto it = owner.find(b);
    if (it == owner.end()) {
      covered = false;
      continue;
    }
    int fixed = 0;
    for (const auto& r : b.roots()) fixed += r.i + r.j == 2 * n + 1 ? 1 : 0;
    invariants = invariants && it->second == std::pair{static_cast<int>(b.size()), fixed};
  }
  rep.add("every sigma-invariant admissible set lies in the orbit of some B_{i,p}", "", covered,
          std::to_string(owner.size()) + " reached of " + std::to_string(all.size()));
  rep.add("orbit of B_{i,p} is the sets with i roots, p of them sigma-fixed", "", invariants);
  return rep;
}

Report coset_suite(const WeylGroup& w) {
  const int n = w.rank();
  Report rep("coset rewriting, rank " + std::to_string(n));
  for (int i = 0; i <= n; ++i)
    for (int p : valid_p(i)) {
      const CosetData c = stabilizer_and_cosets(w, i, p);
      const std::string in = "i=" + std::to_string(i) + ",p=" + std::to_string(p);
      const Monomial b = eval_C(bpip_word(p, i, i), n);
      const Monomial strip = eval_C(e_strip(i, p), n);
      for (const auto& g : c.a_generators) {
        Monomial lhs = eval_C(g, n) * b;
        rep.add("r b_{p,i,i} = b_{p,i,i} for r in A_{i,p}", in + ",r=" + to_string(g), lhs == b);
      }
      for (const auto& g : c.l_generators) {
        Monomial v = eval_C(g, n);
        rep.add("v e_{i,p} = e_{i,p} v for v in L_i", in + ",v=" + to_string(g), v * strip == strip * v);
        rep.add("v b_{p,i,i} = b_{p,i,i} v for v in L_i", in + ",v=" + to_string(g), v * b == b * v);
      }
      std::size_t found = 0;
      for (const auto& el : w.elements()) {
        Monomial target = Monomial{0, el.diagram} * b;
        bool ok = false;
        for (int u : c.d_reps) {
          Monomial ub = Monomial{0, w[u].diagram} * b;
          for (int v : c.l_elements)
            if (ub * Monomial{0, w[v].diagram} == target) {
              ok = true;
              break;
            }
          if (ok) break;
        }
        found += ok ? 1 : 0;
      }
      rep.add("every r b_{p,i,i} equals some u b_{p,i,i} v", in, found == w.size(),
              std::to_string(found) + " of " + std::to_string(w.size()));
    }
  return rep;
}

Report basis_suite(const NormalFormBasis& basis) {
  const WeylGroup& w = basis.group();
  const int n = w.rank();
  Report rep("normal form basis, rank " + std::to_string(n));
  const std::uint64_t symmetric = count_symmetric_diagrams(2 * n, 1);
  const BigInt expected = count_recursion(2 * n);
  rep.add("number of normal forms = a_{2n}", "", BigInt(basis.entries().size()) == expected,
          std::to_string(basis.entries().size()) + " vs " + expected.str());
  rep.add("number of symmetric diagrams = a_{2n}", "", BigInt(symmetric) == expected);
  bool roundtrip = true;
  for (const auto& e : basis.entries()) roundtrip = roundtrip && basis.evaluate(e.nf) == Monomial{0, e.diagram};
  rep.add("delta^k u b v w^op evaluates to the bare diagram", "", roundtrip);

  for (const auto& beta : positive_roots_c(n)) {
    const Monomial eb = e_root(beta, w);
    for (int i = 0; i <= n; ++i) {
      std::map<int, std::tuple<int, int, int, int>> same_layer;
      for (int p : valid_p(i))
        for (int pp : valid_p(i)) {
          const std::string in = "b=" + to_string(beta) + ",p=" + std::to_string(p) + ",i=" + std::to_string(i) +
                                 ",p'=" + std::to_string(pp);
          try {
            EbWitness wit = rewrite_with(eb, p, i, pp, basis);
            rep.add("e_b b_{p,i,p'} has a normal form with h in {i, i+1, i+2}", in, true);
            if (wit.nf.i == i) {
              auto key = std::tuple{wit.k, wit.nf.u, wit.nf.v, wit.nf.p};
              auto [it, fresh] = same_layer.emplace(p, key);
              if (!fresh)
                rep.add("k, u, v do not depend on p' when h = i", in, it->second == key);
            }
          } catch (const std::logic_error& ex) {
            rep.add("e_b b_{p,i,p'} has a normal form with h in {i, i+1, i+2}", in, false, ex.what());
          }
        }
    }
  }
  return rep;
}

Report projection_suite(int n) {
  Report rep("projection onto type C, rank " + std::to_string(n));
  const std::string in = "n=" + std::to_string(n);
  const auto sets = all_sigma_invariant_sets(2 * n);
  std::size_t injective = 0, equivariant = 0, admissible = 0;
  for (const auto& b : sets) {
    const auto y = fp(b);
    injective += lift(y, n) == b ? 1 : 0;
    admissible += is_admissible_C(y, n) ? 1 : 0;
    bool ok = true;
    for (int j = 0; j < n; ++j) {
      std::set<RootC> reflected;
      for (const auto& beta : y) reflected.insert(make_root_c(reflect(j, beta.coeffs)));
      const auto moved = fp(permute(eval_C(word_r(j), n).diagram, b));
      ok = ok && std::vector<RootC>(reflected.begin(), reflected.end()) == moved;
    }
    equivariant += ok ? 1 : 0;
  }
  auto line = [&](const std::string& what, std::size_t got) {
    rep.add(what, in, got == sets.size(), std::to_string(got) + " of " + std::to_string(sets.size()));
  };
  line("lift(fp(B)) = B on sigma-invariant sets", injective);
  line("fp(B) is admissible", admissible);
  line("fp(r_j B) = r_j fp(B)", equivariant);

  // Admissible orthogonal sets of type C correspond one to one with the
  // sigma-invariant sets.
  const auto roots = positive_roots_c(n);
  if (roots.size() <= 16) {
    std::size_t count = 0;
    const std::size_t m = roots.size();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<RootC> y;
      bool orth = true;
      for (std::size_t a = 0; a < m && orth; ++a) {
        if (!(mask >> a & 1u)) continue;
        for (const auto& prev : y) orth = orth && inner2(prev.coeffs, roots[a].coeffs) == 0;
        y.push_back(roots[a]);
      }
      if (orth && is_admissible_C(y, n)) ++count;
    }
    rep.add("admissible type C sets biject with sigma-invariant sets", in, count == sets.size(),
            std::to_string(count) + " vs " + std::to_string(sets.size()));
  }

  auto root = [n](std::vector<int> c) { return make_root_c(std::move(c)); };
  if (n == 2) {
    rep.add("{b1, b0+b1} is not admissible", in, !is_admissible_C({root({0, 1}), root({1, 1})}, 2));
    rep.add("{b0, b0+2b1} is admissible", in, is_admissible_C({root({1, 0}), root({1, 2})}, 2));
  }
  if (n == 4) rep.add("{b1, b3} is admissible", in, is_admissible_C({root({0, 1, 0, 0}), root({0, 0, 0, 1})}, 4));
  return rep;
}

Report generation_suite(int n) {
  if (n < 2) throw std::invalid_argument("generation check needs rank >= 2");
  Report rep("generation by a parabolic and five middle elements, rank " + std::to_string(n));
  std::vector<Diagram> gens;
  for (int j = 0; j < n - 1; ++j) {
    gens.push_back(eval_C(word_r(j), n).diagram);
    gens.push_back(eval_C(word_e(j), n).diagram);
  }
  const auto parabolic = diagram_closure(gens, 2 * n);
  const std::vector<WordC> middle{{}, word_e(n - 1), word_r(n - 1), y_word(n), z_word(n)};
  std::set<Diagram> products;
  for (const auto& mw : middle) {
    const Monomial m = eval_C(mw, n);
    for (const auto& x : parabolic) {
      const Monomial xm = Monomial{0, x} * m;
      for (const auto& y : parabolic) products.insert((xm * Monomial{0, y}).diagram);
    }
  }
  std::set<Diagram> symmetric;
  for_each_diagram(2 * n, [&](const Diagram& d) {
    if (is_symmetric(d)) symmetric.insert(d);
  });
  rep.add("parabolic * {1, e_{n-1}, r_{n-1}, y_n, z_n} * parabolic = symmetric diagrams", "",
          products == symmetric, std::to_string(products.size()) + " vs " + std::to_string(symmetric.size()));
  return rep;
}

}  // namespace brauer
