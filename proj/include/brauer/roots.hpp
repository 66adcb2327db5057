#pragma once

#include "brauer/diagrams.hpp"

#include <compare>
#include <string>
#include <vector>

namespace brauer {

// Positive root eps_i - eps_j of type A, stored as the index pair i < j.
// In simple-root coordinates it is alpha_i + ... + alpha_{j-1}.
struct RootA {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const RootA&, const RootA&) = default;
};

inline RootA simple_root(int i) { return {i, i + 1}; }
inline bool orthogonal(const RootA& a, const RootA& b) {
  return a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j;
}

// Mutually orthogonal positive roots on a fixed number of strands; roots are
// kept sorted so that equality is structural.
class AdmissibleSetA {
 public:
  AdmissibleSetA() = default;
  /// Validates range and pairwise disjointness.
  AdmissibleSetA(int strands, std::vector<RootA> roots);

  int strands() const { return strands_; }
  const std::vector<RootA>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  bool empty() const { return roots_.empty(); }
  bool contains(const RootA& r) const;
  /// Index of the root using dot d, or -1 if d is free.
  int root_at(int d) const;

  std::string to_string() const;
  friend auto operator<=>(const AdmissibleSetA&, const AdmissibleSetA&) = default;

 private:
  int strands_ = 0;
  std::vector<RootA> roots_;
};

AdmissibleSetA top(const Diagram& d);
AdmissibleSetA bottom(const Diagram& d);
inline AdmissibleSetA top(const Monomial& m) { return top(m.diagram); }
inline AdmissibleSetA bottom(const Monomial& m) { return bottom(m.diagram); }

/// Case-based action of a single generator letter; delta letters act
/// trivially. Throws std::logic_error if two choices of the non-orthogonal
/// root in the E_i case disagree.
AdmissibleSetA act_generator(const Letter& g, const AdmissibleSetA& b);
/// Left action of a word: the rightmost letter acts first.
AdmissibleSetA act_word(const WordA& w, const AdmissibleSetA& b);

/// Action by completion: top(a * a_{B,B}).
AdmissibleSetA act_left(const Monomial& a, const AdmissibleSetA& b);
/// Right action B * a, read on bottoms; equals act_left(op(a), B).
AdmissibleSetA act_right(const AdmissibleSetA& b, const Monomial& a);

/// Image of B under a permutation diagram, relabelling each dot y by the top
/// dot joined to bottom dot y.
AdmissibleSetA permute(const Diagram& perm, const AdmissibleSetA& b);

/// Crossings among the chords of B plus, for each chord, the free dots it
/// encloses.
int height_set(const AdmissibleSetA& b);

/// Top B, bottom C, free dots joined in left-to-right order.
Diagram canonical_diagram(const AdmissibleSetA& b, const AdmissibleSetA& c);

/// E_B as a diagram (top and bottom both B), delta exponent 0.
Monomial E_product(const AdmissibleSetA& b);
/// delta^{-|B|} E_B, an idempotent.
Monomial E_hat(const AdmissibleSetA& b);
/// R_{j-1} ... R_{i+1} E_i R_{i+1} ... R_{j-1} for the root (i, j).
WordA E_root_word(const RootA& r);

RootA sigma(const RootA& r, int strands);
AdmissibleSetA sigma(const AdmissibleSetA& b);
bool is_sigma_invariant(const AdmissibleSetA& b);

/// Case-based action against the completion action for every generator and
/// every admissible set; also op-duality of the right action and
/// sigma-equivariance.
Report action_suite(int strands);

/// Every admissible set on the given strand count, sorted.
std::vector<AdmissibleSetA> all_admissible_sets(int strands);
std::vector<AdmissibleSetA> all_sigma_invariant_sets(int strands);

// ---------------------------------------------------------------------------
// Type C roots. Coordinates are over beta_0 (long) and beta_1..beta_{n-1}.

enum class RootNorm { Short, Long };

struct RootC {
  std::vector<int> coeffs;
  RootNorm norm = RootNorm::Short;
  friend auto operator<=>(const RootC&, const RootC&) = default;
};

std::string to_string(const RootC& r);
RootC simple_root_c(int n, int j);

/// Twice the inner product, normalized so short roots have norm 1 and long
/// roots norm 2 (so the doubled values are 2 and 4).
int inner2(const std::vector<int>& x, const std::vector<int>& y);
/// Simple reflection r_j applied to a coordinate vector.
std::vector<int> reflect(int j, const std::vector<int>& x);
/// Applies a word in r-letters (rightmost first); e and delta letters are
/// rejected.
std::vector<int> apply_reflections(const std::vector<Letter>& letters, std::vector<int> x);
/// Sign-normalizes and tags the norm. Throws if x is not a root.
RootC make_root_c(std::vector<int> x);

/// All positive roots of C_n, sorted.
std::vector<RootC> positive_roots_c(int n);

/// Projection onto the sigma-fixed space. Long iff the root is sigma-fixed.
RootC fp(const RootA& r, int n);
/// Throws std::invalid_argument on a set that is not sigma-invariant.
std::vector<RootC> fp(const AdmissibleSetA& b);
/// Full preimage of a set of type C roots.
std::vector<RootA> preimage(const std::vector<RootC>& y, int n);
/// Full preimage as an admissible set; throws if it is not pairwise disjoint.
AdmissibleSetA lift(const std::vector<RootC>& y, int n);
/// Y must be pairwise orthogonal (std::invalid_argument otherwise). True iff
/// its full preimage is pairwise disjoint.
bool is_admissible_C(const std::vector<RootC>& y, int n);

}  // namespace brauer
