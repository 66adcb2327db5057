#include "brauer/diagrams.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace brauer {

namespace {

constexpr int kMaxStrands = 127;

void require_strands(int strands) {
  if (strands < 1 || strands > kMaxStrands)
    throw std::invalid_argument("strand count must be in 1.." + std::to_string(kMaxStrands));
}

void require_index(int strands, int i) {
  if (i < 1 || i > strands - 1)
    throw std::out_of_range("generator index " + std::to_string(i) + " out of range for " +
                            std::to_string(strands) + " strands");
}

// Boundary position of a raw dot when walking the top row left to right and
// then the bottom row right to left.
inline int boundary_position(int raw, int n) { return raw < n ? raw : 3 * n - 1 - raw; }

}  // namespace

Diagram Diagram::identity(int strands) {
  require_strands(strands);
  std::vector<std::uint8_t> m(2 * strands);
  for (int i = 0; i < strands; ++i) {
    m[i] = static_cast<std::uint8_t>(strands + i);
    m[strands + i] = static_cast<std::uint8_t>(i);
  }
  return Diagram(strands, std::move(m));
}

Diagram Diagram::from_pairs(int strands, std::span<const std::pair<int, int>> pairs) {
  require_strands(strands);
  const int dots = 2 * strands;
  if (static_cast<int>(pairs.size()) != strands)
    throw std::invalid_argument("a diagram on " + std::to_string(strands) + " strands needs exactly " +
                                std::to_string(strands) + " pairs");
  std::vector<int> m(dots, -1);
  for (auto [a, b] : pairs) {
    if (a < 1 || a > dots || b < 1 || b > dots || a == b)
      throw std::invalid_argument("bad dot pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
    if (m[a - 1] != -1 || m[b - 1] != -1)
      throw std::invalid_argument("dot used twice in pair list");
    m[a - 1] = b - 1;
    m[b - 1] = a - 1;
  }
  std::vector<std::uint8_t> mates(m.begin(), m.end());
  return Diagram(strands, std::move(mates));
}

Diagram Diagram::from_mates(std::vector<std::uint8_t> mates) {
  if (mates.empty() || mates.size() % 2 != 0)
    throw std::invalid_argument("mate table must have even, nonzero length");
  const int dots = static_cast<int>(mates.size());
  require_strands(dots / 2);
  for (int d = 0; d < dots; ++d) {
    int m = mates[d];
    if (m >= dots || m == d || mates[m] != d)
      throw std::invalid_argument("mate table is not a fixed-point-free involution");
  }
  return Diagram(dots / 2, std::move(mates));
}

int Diagram::partner(int dot) const {
  if (dot < 1 || dot > dots()) throw std::out_of_range("dot out of range");
  return mates_[dot - 1] + 1;
}

std::vector<std::pair<int, int>> Diagram::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(n_);
  for (int d = 0; d < dots(); ++d)
    if (d < mates_[d]) out.emplace_back(d + 1, mates_[d] + 1);
  return out;
}

int Diagram::top_horizontal_count() const {
  int c = 0;
  for (int d = 0; d < n_; ++d)
    if (mates_[d] < n_ && d < mates_[d]) ++c;
  return c;
}

std::string Diagram::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto [a, b] : pairs()) {
    if (!first) os << ",";
    first = false;
    os << "(" << a << "," << b << ")";
  }
  os << "}";
  return os.str();
}

std::size_t DiagramHash::operator()(const Diagram& d) const noexcept {
  // FNV-1a over the mate table.
  std::size_t h = 1469598103934665603ull;
  for (auto m : d.mates()) {
    h ^= m;
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_string(const Monomial& m) {
  std::ostringstream os;
  if (m.delta_exp != 0) os << "d^" << m.delta_exp << " ";
  os << m.diagram.to_string();
  return os.str();
}

Diagram generator_R(int strands, int i) {
  require_strands(strands);
  require_index(strands, i);
  Diagram id = Diagram::identity(strands);
  std::vector<std::uint8_t> m = id.mates();
  const int a = i - 1, b = i;
  m[a] = static_cast<std::uint8_t>(strands + b);
  m[strands + b] = static_cast<std::uint8_t>(a);
  m[b] = static_cast<std::uint8_t>(strands + a);
  m[strands + a] = static_cast<std::uint8_t>(b);
  return Diagram::from_mates_unchecked(std::move(m));
}

Diagram generator_E(int strands, int i) {
  require_strands(strands);
  require_index(strands, i);
  std::vector<std::uint8_t> m = Diagram::identity(strands).mates();
  const int a = i - 1, b = i;
  m[a] = static_cast<std::uint8_t>(b);
  m[b] = static_cast<std::uint8_t>(a);
  m[strands + a] = static_cast<std::uint8_t>(strands + b);
  m[strands + b] = static_cast<std::uint8_t>(strands + a);
  return Diagram::from_mates_unchecked(std::move(m));
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  const int n = a.strands();
  if (b.strands() != n)
    throw std::invalid_argument("cannot multiply diagrams on " + std::to_string(n) + " and " +
                                std::to_string(b.strands()) + " strands");
  const auto& am = a.diagram.mates();
  const auto& bm = b.diagram.mates();
  std::vector<std::uint8_t> out(2 * n, 0);
  std::vector<char> done(2 * n, 0);
  std::vector<char> middle(n, 0);

  // Result dot r < n is a's top dot r; result dot r >= n is b's bottom dot r.
  auto trace_from_top = [&](int x) {
    int cur = am[x];
    for (;;) {
      if (cur < n) return cur;
      int k = cur - n;
      middle[k] = 1;
      int t = bm[k];
      if (t >= n) return t;
      middle[t] = 1;
      cur = am[n + t];
    }
  };
  auto trace_from_bottom = [&](int y) {
    int cur = bm[y];
    for (;;) {
      if (cur >= n) return cur;
      middle[cur] = 1;
      int s = am[n + cur];
      if (s < n) return s;
      int k = s - n;
      middle[k] = 1;
      cur = bm[k];
    }
  };

  for (int r = 0; r < 2 * n; ++r) {
    if (done[r]) continue;
    int end = r < n ? trace_from_top(r) : trace_from_bottom(r);
    out[r] = static_cast<std::uint8_t>(end);
    out[end] = static_cast<std::uint8_t>(r);
    done[r] = done[end] = 1;
  }

  int loops = 0;
  for (int k0 = 0; k0 < n; ++k0) {
    if (middle[k0]) continue;
    ++loops;
    int k = k0;
    do {
      middle[k] = 1;
      int t = bm[k];
      middle[t] = 1;
      k = am[n + t] - n;
    } while (k != k0);
  }
  return {a.delta_exp + b.delta_exp + loops, Diagram::from_mates_unchecked(std::move(out))};
}

Diagram sigma(const Diagram& d) {
  const int n = d.strands();
  auto s = [n](int x) { return x < n ? n - 1 - x : 3 * n - 1 - x; };
  std::vector<std::uint8_t> m(2 * n);
  for (int x = 0; x < 2 * n; ++x) m[s(x)] = static_cast<std::uint8_t>(s(d.mates()[x]));
  return Diagram::from_mates_unchecked(std::move(m));
}

Monomial sigma(const Monomial& m) { return {m.delta_exp, sigma(m.diagram)}; }

bool is_symmetric(const Diagram& d) {
  const int n = d.strands();
  const auto& m = d.mates();
  auto s = [n](int x) { return x < n ? n - 1 - x : 3 * n - 1 - x; };
  for (int x = 0; x < 2 * n; ++x)
    if (m[s(x)] != s(m[x])) return false;
  return true;
}

Diagram op(const Diagram& d) {
  const int n = d.strands();
  auto t = [n](int x) { return x < n ? x + n : x - n; };
  std::vector<std::uint8_t> m(2 * n);
  for (int x = 0; x < 2 * n; ++x) m[t(x)] = static_cast<std::uint8_t>(t(d.mates()[x]));
  return Diagram::from_mates_unchecked(std::move(m));
}

Monomial op(const Monomial& m) { return {m.delta_exp, op(m.diagram)}; }

int height(const Diagram& d) {
  const int n = d.strands();
  std::vector<std::pair<int, int>> chords;
  chords.reserve(n);
  for (int x = 0; x < 2 * n; ++x) {
    int y = d.mates()[x];
    if (x < y) {
      int p = boundary_position(x, n), q = boundary_position(y, n);
      chords.emplace_back(std::min(p, q), std::max(p, q));
    }
  }
  int crossings = 0;
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      auto [a, b] = chords[i];
      auto [c, e] = chords[j];
      if ((a < c && c < b && b < e) || (c < a && a < e && e < b)) ++crossings;
    }
  return crossings;
}

// ---------------------------------------------------------------------------

WordA operator*(WordA a, const WordA& b) {
  a.letters.insert(a.letters.end(), b.letters.begin(), b.letters.end());
  return a;
}

WordA word_R(int i) { return {{{LetterKind::Reflection, i}}}; }
WordA word_E(int i) { return {{{LetterKind::Quasi, i}}}; }

namespace {

Letter parse_token_a(std::string_view tok) {
  while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
  while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
  if (tok == "d") return {LetterKind::Delta, 0};
  if (tok == "D") return {LetterKind::DeltaInverse, 0};
  if (tok.size() >= 2 && (tok[0] == 'R' || tok[0] == 'E')) {
    int v = 0;
    for (char c : tok.substr(1)) {
      if (c < '0' || c > '9') throw std::invalid_argument("invalid token '" + std::string(tok) + "'");
      v = v * 10 + (c - '0');
      if (v > 100000) throw std::invalid_argument("index too large in '" + std::string(tok) + "'");
    }
    return {tok[0] == 'R' ? LetterKind::Reflection : LetterKind::Quasi, v};
  }
  throw std::invalid_argument("invalid token '" + std::string(tok) + "'");
}

}  // namespace

WordA parse_word_a(std::string_view s) {
  WordA w;
  if (s.find_first_not_of(' ') == std::string_view::npos) return w;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = s.find(',', start);
    w.letters.push_back(parse_token_a(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return w;
}

WordA word_a_from_tokens(const std::vector<std::string>& toks) {
  WordA w;
  for (const auto& t : toks) w.letters.push_back(parse_token_a(t));
  return w;
}

std::vector<std::string> tokens(const WordA& w) {
  std::vector<std::string> out;
  for (const auto& l : w.letters) {
    switch (l.kind) {
      case LetterKind::Reflection: out.push_back("R" + std::to_string(l.index)); break;
      case LetterKind::Quasi: out.push_back("E" + std::to_string(l.index)); break;
      case LetterKind::Delta: out.push_back("d"); break;
      case LetterKind::DeltaInverse: out.push_back("D"); break;
    }
  }
  return out;
}

Monomial evaluate_word(const WordA& w, int strands) {
  Monomial acc = Monomial::identity(strands);
  for (const auto& l : w.letters) {
    switch (l.kind) {
      case LetterKind::Delta: ++acc.delta_exp; break;
      case LetterKind::DeltaInverse: --acc.delta_exp; break;
      case LetterKind::Reflection: acc = acc * Monomial{0, generator_R(strands, l.index)}; break;
      case LetterKind::Quasi: acc = acc * Monomial{0, generator_E(strands, l.index)}; break;
    }
  }
  return acc;
}

// ---------------------------------------------------------------------------

namespace {

// Pairs the smallest free dot with each larger free dot in turn, which yields
// diagrams in canonical order.
template <class Visit>
void enumerate_rec(std::vector<std::uint8_t>& m, std::vector<char>& used, int dots, Visit& visit) {
  int a = 0;
  while (a < dots && used[a]) ++a;
  if (a == dots) {
    visit(m);
    return;
  }
  used[a] = 1;
  for (int b = a + 1; b < dots; ++b) {
    if (used[b]) continue;
    used[b] = 1;
    m[a] = static_cast<std::uint8_t>(b);
    m[b] = static_cast<std::uint8_t>(a);
    enumerate_rec(m, used, dots, visit);
    used[b] = 0;
  }
  used[a] = 0;
}

template <class Visit>
void enumerate_with_first(int strands, int first_mate, Visit& visit) {
  const int dots = 2 * strands;
  std::vector<std::uint8_t> m(dots, 0);
  std::vector<char> used(dots, 0);
  used[0] = used[first_mate] = 1;
  m[0] = static_cast<std::uint8_t>(first_mate);
  m[first_mate] = 0;
  enumerate_rec(m, used, dots, visit);
}

void check_bound(int strands, int bound) {
  require_strands(strands);
  if (strands > bound)
    throw std::length_error("enumeration bound exceeded: " + std::to_string(strands) + " > " +
                            std::to_string(bound));
}

}  // namespace

void for_each_diagram(int strands, const std::function<void(const Diagram&)>& visit, int bound) {
  check_bound(strands, bound);
  auto emit = [&](const std::vector<std::uint8_t>& m) { visit(Diagram::from_mates_unchecked(m)); };
  for (int first = 1; first < 2 * strands; ++first) enumerate_with_first(strands, first, emit);
}

std::vector<Diagram> enumerate_diagrams(int strands, int bound) {
  std::vector<Diagram> out;
  for_each_diagram(strands, [&](const Diagram& d) { out.push_back(d); }, bound);
  return out;
}

BigInt diagram_count(int strands) {
  BigInt r = 1;
  for (int k = 1; k <= 2 * strands - 1; k += 2) r *= k;
  return r;
}

std::uint64_t count_symmetric_diagrams(int strands, int jobs, int bound) {
  check_bound(strands, bound);
  const int n = strands;
  auto s = [n](int x) { return x < n ? n - 1 - x : 3 * n - 1 - x; };
  const int firsts = 2 * n - 1;
  std::vector<std::uint64_t> partial(firsts, 0);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k; (k = next.fetch_add(1)) < firsts;) {
      std::uint64_t c = 0;
      auto visit = [&](const std::vector<std::uint8_t>& m) {
        for (int x = 0; x < 2 * n; ++x)
          if (m[s(x)] != s(m[x])) return;
        ++c;
      };
      enumerate_with_first(n, k + 1, visit);
      partial[k] = c;
    }
  };
  const int threads = std::clamp(jobs, 1, firsts);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

// ---------------------------------------------------------------------------

AlgebraElement AlgebraElement::from_monomial(const Monomial& m, const LaurentPoly& coeff) {
  AlgebraElement a(m.strands());
  a.add_term(m.diagram, coeff.shifted(m.delta_exp));
  return a;
}

LaurentPoly AlgebraElement::coeff(const Diagram& d) const {
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? LaurentPoly{} : it->second;
}

void AlgebraElement::add_term(const Diagram& d, const LaurentPoly& c) {
  if (strands_ == 0) strands_ = d.strands();
  if (d.strands() != strands_) throw std::invalid_argument("mismatched strand counts");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(d, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  for (const auto& [d, c] : other.coeffs_) add_term(d, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  for (const auto& [d, c] : other.coeffs_) add_term(d, -c);
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.strands_ != 0 && b.strands_ != 0 && a.strands_ != b.strands_)
    throw std::invalid_argument("mismatched strand counts");
  AlgebraElement out(a.strands_ != 0 ? a.strands_ : b.strands_);
  for (const auto& [da, ca] : a.coeffs_)
    for (const auto& [db, cb] : b.coeffs_) {
      Monomial p = Monomial{0, da} * Monomial{0, db};
      out.add_term(p.diagram, (ca * cb).shifted(p.delta_exp));
    }
  return out;
}

AlgebraElement operator*(const LaurentPoly& s, const AlgebraElement& a) {
  AlgebraElement out(a.strands_);
  for (const auto& [d, c] : a.coeffs_) out.add_term(d, s * c);
  return out;
}

AlgebraElement algebra_multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

// ---------------------------------------------------------------------------

Report relation_suite_A(int strands) {
  require_strands(strands);
  Report report("type A relations on " + std::to_string(strands) + " strands");
  const int m = strands - 1;
  const WordA d{{{LetterKind::Delta, 0}}};
  auto R = word_R;
  auto E = word_E;
  auto check = [&](const std::string& name, const std::string& inst, const WordA& lhs, const WordA& rhs) {
    Monomial l = evaluate_word(lhs, strands);
    Monomial r = evaluate_word(rhs, strands);
    report.add(name, inst, l == r, l == r ? "" : to_string(l) + " != " + to_string(r));
  };
  auto inst = [](int i, int j = 0, int k = 0) {
    std::string s = "i=" + std::to_string(i);
    if (j) s += ",j=" + std::to_string(j);
    if (k) s += ",k=" + std::to_string(k);
    return s;
  };

  for (int i = 1; i <= m; ++i) {
    check("R_i R_i = 1", inst(i), R(i) * R(i), {});
    check("E_i E_i = d E_i", inst(i), E(i) * E(i), d * E(i));
    check("R_i E_i = E_i", inst(i), R(i) * E(i), E(i));
    check("E_i R_i = E_i", inst(i), E(i) * R(i), E(i));
  }
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      if (i == j) continue;
      if (std::abs(i - j) > 1) {
        check("R_i R_j = R_j R_i", inst(i, j), R(i) * R(j), R(j) * R(i));
        check("E_i R_j = R_j E_i", inst(i, j), E(i) * R(j), R(j) * E(i));
        check("E_i E_j = E_j E_i", inst(i, j), E(i) * E(j), E(j) * E(i));
        continue;
      }
      check("R_i R_j R_i = R_j R_i R_j", inst(i, j), R(i) * R(j) * R(i), R(j) * R(i) * R(j));
      check("R_j R_i E_j = E_i E_j", inst(i, j), R(j) * R(i) * E(j), E(i) * E(j));
      check("R_i E_j R_i = R_j E_i R_j", inst(i, j), R(i) * E(j) * R(i), R(j) * E(i) * R(j));
      check("E_i R_j R_i = E_i E_j", inst(i, j), E(i) * R(j) * R(i), E(i) * E(j));
      check("R_j E_i E_j = R_i E_j", inst(i, j), R(j) * E(i) * E(j), R(i) * E(j));
      check("E_i R_j E_i = E_i", inst(i, j), E(i) * R(j) * E(i), E(i));
      check("E_j E_i R_j = E_j R_i", inst(i, j), E(j) * E(i) * R(j), E(j) * R(i));
      check("E_i E_j E_i = E_i", inst(i, j), E(i) * E(j) * E(i), E(i));
    }
  // Chains i~j~k with i, k not adjacent, in both directions.
  for (int t = 1; t + 2 <= m; ++t) {
    for (auto [i, j, k] : {std::tuple{t, t + 1, t + 2}, std::tuple{t + 2, t + 1, t}}) {
      check("E_j E_i R_k E_j = E_j R_i E_k E_j", inst(i, j, k), E(j) * E(i) * R(k) * E(j),
            E(j) * R(i) * E(k) * E(j));
      check("E_j R_i R_k E_j = E_j E_i E_k E_j", inst(i, j, k), E(j) * R(i) * R(k) * E(j),
            E(j) * E(i) * E(k) * E(j));
    }
  }
  return report;
}

}  // namespace brauer
