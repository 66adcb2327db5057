#include "brauer/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace brauer {

AdmissibleSetA reference_set(int strands, int size) {
  const int m = strands / 2;
  if (size < 0 || size > m) throw std::invalid_argument("reference set size out of range");
  std::vector<RootA> roots;
  for (int j = 1; j <= size; ++j) roots.push_back({m - j + 1, m + j});
  return {strands, std::move(roots)};
}

UVWDecomposition decompose(const Monomial& a, const AdmissibleSetA& b) {
  if (b.strands() != a.strands()) throw std::invalid_argument("mismatched strand counts");
  if (height_set(b) != 0) throw std::invalid_argument("reference set must have height 0");
  const AdmissibleSetA t = top(a);
  const AdmissibleSetA bt = bottom(a);
  if (t.size() != b.size()) throw std::invalid_argument("reference set size differs from the top of a");
  UVWDecomposition d;
  d.B = b;
  d.U = canonical_diagram(t, b);
  d.W = op(canonical_diagram(bt, b));
  d.V = (Monomial{0, op(d.U)} * a * Monomial{0, op(d.W)}).diagram;
  Monomial uvw = recompose(d);
  if (uvw.diagram != a.diagram) throw std::logic_error("U V W does not recompose to " + a.diagram.to_string());
  d.k = uvw.delta_exp - a.delta_exp;
  return d;
}

UVWDecomposition decompose(const Monomial& a) {
  return decompose(a, reference_set(a.strands(), a.diagram.top_horizontal_count()));
}

Monomial recompose(const UVWDecomposition& d) {
  return Monomial{0, d.U} * Monomial{0, d.V} * Monomial{0, d.W};
}

Report uvw_suite(int strands) {
  Report rep("UVW decomposition on " + std::to_string(strands) + " strands");
  std::size_t total = 0, recomposed = 0, additive = 0, in_k = 0, shapes = 0;
  std::set<std::tuple<Diagram, Diagram, Diagram>> images;
  std::map<int, KGroup> groups;
  for_each_diagram(strands, [&](const Diagram& a) {
    ++total;
    const Monomial m{0, a};
    UVWDecomposition d = decompose(m);
    Monomial back = recompose(d);
    if (back == Monomial{d.k, a}) ++recomposed;
    if (height(a) == height(d.U) + height(d.V) + height(d.W)) ++additive;
    if (top(d.U) == top(a) && bottom(d.W) == bottom(a) && top(d.V) == d.B && bottom(d.V) == d.B &&
        bottom(d.U) == d.B && top(d.W) == d.B)
      ++shapes;
    const int s = static_cast<int>(d.B.size());
    auto it = groups.find(s);
    if (it == groups.end()) it = groups.emplace(s, k_group(d.B)).first;
    if (std::binary_search(it->second.elements.begin(), it->second.elements.end(), d.V)) ++in_k;
    images.emplace(d.U, d.V, d.W);
  });
  auto line = [&](const std::string& name, std::size_t got) {
    rep.add(name, "N=" + std::to_string(strands), got == total, std::to_string(got) + " of " + std::to_string(total));
  };
  line("U V W = d^k a", recomposed);
  line("height(a) = height(U) + height(V) + height(W)", additive);
  line("top(U) = top(a), bottom(W) = bottom(a), V has top and bottom B", shapes);
  line("V lies in K_B", in_k);
  line("a -> (U, V, W) is injective", images.size());
  return rep;
}

// ---------------------------------------------------------------------------

KGroup k_group(const AdmissibleSetA& b) {
  if (height_set(b) != 0) throw std::invalid_argument("K_B needs a set of height 0, got " + b.to_string());
  const int n = b.strands();
  KGroup k;
  k.B = b;
  const Diagram unit = canonical_diagram(b, b);
  std::vector<int> free;
  for (int d = 1; d <= n; ++d)
    if (b.root_at(d) < 0) free.push_back(d);
  for (std::size_t t = 0; t + 1 < free.size(); ++t) {
    std::vector<std::uint8_t> m = unit.mates();
    const int x = free[t] - 1, y = free[t + 1] - 1;
    const int bx = m[x], by = m[y];
    m[x] = static_cast<std::uint8_t>(by);
    m[by] = static_cast<std::uint8_t>(x);
    m[y] = static_cast<std::uint8_t>(bx);
    m[bx] = static_cast<std::uint8_t>(y);
    k.generators.push_back(Diagram::from_mates(std::move(m)));
  }
  k.elements.push_back(unit);
  std::unordered_set<Diagram, DiagramHash> seen{unit};
  for (std::size_t at = 0; at < k.elements.size(); ++at)
    for (const auto& g : k.generators) {
      Diagram d = k_multiply(k, k.elements[at], g);
      if (seen.insert(d).second) k.elements.push_back(d);
    }
  std::sort(k.elements.begin(), k.elements.end());
  return k;
}

Diagram k_multiply(const KGroup& k, const Diagram& x, const Diagram& y) {
  Monomial m = Monomial{0, x} * Monomial{0, y};
  if (m.delta_exp != static_cast<int>(k.B.size())) throw std::logic_error("product left the group K_B");
  return m.diagram;
}

Report k_group_suite(const AdmissibleSetA& b) {
  Report rep("K_B for B = " + b.to_string());
  const KGroup k = k_group(b);
  const std::string in = "B=" + b.to_string();
  const int r = static_cast<int>(k.generators.size());
  std::size_t order = 1;
  for (int t = 2; t <= r + 1; ++t) order *= t;
  rep.add("|K_B| = (r+1)!", in, k.elements.size() == order,
          std::to_string(k.elements.size()) + " vs " + std::to_string(order));
  const Diagram unit = canonical_diagram(b, b);
  bool heights = true, squares = true, braids = true, commute = true;
  for (int s = 0; s < r; ++s) {
    const Diagram& g = k.generators[s];
    heights = heights && height(g) == 1;
    squares = squares && k_multiply(k, g, g) == unit;
    for (int t = s + 1; t < r; ++t) {
      const Diagram& h = k.generators[t];
      if (t == s + 1) {
        braids = braids && k_multiply(k, k_multiply(k, g, h), g) == k_multiply(k, k_multiply(k, h, g), h);
      } else {
        commute = commute && k_multiply(k, g, h) == k_multiply(k, h, g);
      }
    }
  }
  rep.add("generators have height 1", in, heights);
  rep.add("s s = 1", in, squares);
  rep.add("s t s = t s t for adjacent generators", in, braids);
  rep.add("s t = t s for distant generators", in, commute);
  return rep;
}

std::size_t sigma_fixed_k_order(int n, int i) {
  const KGroup k = k_group(B_i_set(n, i));
  return static_cast<std::size_t>(std::count_if(k.elements.begin(), k.elements.end(), is_symmetric));
}

// ---------------------------------------------------------------------------

CellDatum build_cell_datum(const NormalFormBasis& basis) {
  const WeylGroup& w = basis.group();
  const int n = w.rank();
  if (n > 3) throw std::length_error("cell datum is limited to rank 3");
  CellDatum datum;
  datum.n = n;
  for (int i = 0; i <= n; ++i) {
    datum.lambda.push_back(i);
    CellLayer layer;
    layer.i = i;
    const auto& ls = basis.cosets(i, i % 2).l_elements;
    for (int p : valid_p(i))
      for (int u : basis.cosets(i, p).d_reps)
        for (int s : ls) layer.T.push_back({u, p, s});

    const Monomial bi = eval_C(b_word(i), n);
    std::vector<Monomial> left, right;
    for (const auto& x : layer.T)
      left.push_back(Monomial{-i, w[x.u].diagram} * eval_C(e_strip(i, x.p), n) * bi);
    for (const auto& y : layer.T)
      right.push_back(eval_C(e_strip(i, y.p), n) * Monomial{0, op(w[y.u].diagram)});
    layer.C.resize(layer.T.size());
    for (std::size_t x = 0; x < layer.T.size(); ++x) {
      layer.C[x].reserve(layer.T.size());
      for (std::size_t y = 0; y < layer.T.size(); ++y) {
        const int v = w.multiply(layer.T[x].s, w.inverse(layer.T[y].s));
        layer.C[x].push_back(left[x] * Monomial{0, w[v].diagram} * right[y]);
      }
    }
    datum.layers.push_back(std::move(layer));
  }
  return datum;
}

void corrupt_cell_datum(CellDatum& datum) {
  for (auto& layer : datum.layers) {
    const auto& T = layer.T;
    for (std::size_t y1 = 1; y1 < T.size(); ++y1)
      if (T[y1].u != T[0].u || T[y1].p != T[0].p) {
        std::swap(layer.C[0][0], layer.C[0][y1]);
        return;
      }
  }
  throw std::logic_error("no layer has two right cosets to swap");
}

Report check_cell_datum(const CellDatum& datum, const NormalFormBasis& basis) {
  Report rep("cell datum, rank " + std::to_string(datum.n));
  for (const auto& layer : datum.layers) {
    const std::string in = "i=" + std::to_string(layer.i);
    std::set<Diagram> image, expected;
    bool op_sym = true;
    for (std::size_t x = 0; x < layer.T.size(); ++x)
      for (std::size_t y = 0; y < layer.T.size(); ++y) {
        image.insert(layer.C[x][y].diagram);
        op_sym = op_sym && op(layer.C[x][y]) == layer.C[y][x];
      }
    for (const auto& e : basis.entries())
      if (e.nf.i == layer.i) expected.insert(e.diagram);
    rep.add("image of C on layer i is the basis layer i", in, image == expected,
            std::to_string(image.size()) + " vs " + std::to_string(expected.size()));
    rep.add("C(x,y)^op = C(y,x)", in, op_sym);
  }
  return rep;
}

Report check_filtration(const CellDatum& datum) {
  const int n = datum.n;
  Report rep("cell filtration, rank " + std::to_string(n));
  std::vector<WordC> gens;
  for (int j = 0; j < n; ++j) gens.push_back(word_r(j));
  for (int j = 0; j < n; ++j) gens.push_back(word_e(j));

  for (const auto& layer : datum.layers) {
    const std::size_t size = layer.T.size();
    std::vector<std::unordered_map<Diagram, int, DiagramHash>> column(size);
    for (std::size_t x = 0; x < size; ++x)
      for (std::size_t y = 0; y < size; ++y) column[y].emplace(layer.C[x][y].diagram, static_cast<int>(x));

    for (const auto& g : gens) {
      const Monomial gm = eval_C(g, n);
      const std::string in = "g=" + to_string(g) + ",i=" + std::to_string(layer.i);
      std::size_t upward = 0, missing = 0, dependent = 0, lower = 0;
      for (std::size_t x = 0; x < size; ++x) {
        std::optional<std::pair<int, int>> first;
        for (std::size_t y = 0; y < size; ++y) {
          const Monomial m = gm * layer.C[x][y];
          const int h = m.diagram.top_horizontal_count();
          if (datum.greater(h, layer.i)) {
            ++upward;
            continue;
          }
          if (h != layer.i) {
            ++lower;
            continue;
          }
          auto it = column[y].find(m.diagram);
          if (it == column[y].end()) {
            ++missing;
            continue;
          }
          std::pair<int, int> coeff{it->second, m.delta_exp - layer.C[it->second][y].delta_exp};
          if (!first) {
            first = coeff;
          } else if (*first != coeff) {
            ++dependent;
          }
        }
      }
      rep.add("no term lies above the layer", in, upward == 0, std::to_string(upward) + " terms");
      rep.add("same-layer terms are C(x',y)", in, missing == 0, std::to_string(missing) + " terms not found");
      rep.add("x' and its coefficient do not depend on y", in, dependent == 0,
              std::to_string(dependent) + " mismatches; " + std::to_string(lower) + " terms moved lower");
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

std::size_t parabolic_rank(int n, const std::vector<int>& J) {
  if (n < 1 || n > 5) throw std::length_error("parabolic closure is limited to rank 5");
  std::vector<Diagram> gens;
  for (int j : J) {
    if (j < 0 || j >= n) throw std::out_of_range("node " + std::to_string(j) + " out of range");
    gens.push_back(eval_C(word_r(j), n).diagram);
    gens.push_back(eval_C(word_e(j), n).diagram);
  }
  return diagram_closure(gens, 2 * n).size();
}

std::vector<Diagram> tl_closure_C(int n) {
  std::vector<Diagram> gens;
  for (int j = 0; j < n; ++j) gens.push_back(eval_C(word_e(j), n).diagram);
  return diagram_closure(gens, 2 * n);
}

Report tl_subalgebra(int n) {
  if (n < 1 || n > 4) throw std::length_error("Temperley-Lieb check is limited to rank 4");
  Report rep("Temperley-Lieb subalgebra, rank " + std::to_string(n));
  const auto closure = tl_closure_C(n);
  std::vector<Diagram> gens;
  for (int j = 1; j < 2 * n; ++j) gens.push_back(generator_E(2 * n, j));
  std::vector<Diagram> symmetric_tl;
  for (const auto& d : diagram_closure(gens, 2 * n))
    if (is_symmetric(d)) symmetric_tl.push_back(d);
  rep.add("closure of phi(e_j) = symmetric part of the type A closure", "n=" + std::to_string(n),
          closure == symmetric_tl, std::to_string(closure.size()) + " vs " + std::to_string(symmetric_tl.size()));

  const WeylGroup w = WeylGroup::build(n);
  for (const auto& b : all_sigma_invariant_sets(2 * n)) {
    Monomial eb = Monomial::identity(2 * n);
    for (const auto& beta : fp(b)) eb = eb * e_root(beta, w);
    const std::string in = "B=" + b.to_string();
    rep.add("E_B = phi(e_{fp(B)})", in, eb == E_product(b));
    if (height_set(b) == 0)
      rep.add("E_B lies in the closure of phi(e_j)", in,
              std::binary_search(closure.begin(), closure.end(), E_product(b).diagram));
  }
  return rep;
}

}  // namespace brauer
