#pragma once

#include "brauer/diagrams.hpp"
#include "brauer/roots.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace brauer {

// Word in r_i, e_i (0 <= i < n), delta, delta^-1. Tokens: "r0", "e2", "d", "D".
// Letters reuse the type A encoding: Reflection is r, Quasi is e.
struct WordC {
  std::vector<Letter> letters;
  friend bool operator==(const WordC&, const WordC&) = default;
};

WordC operator*(WordC a, const WordC& b);
WordC word_r(int i);
WordC word_e(int i);
WordC word_delta(int power);
/// Reversed word; on the presentation this is the op anti-involution.
WordC reversed(const WordC& w);

WordC parse_word_c(std::string_view comma_separated);
WordC word_c_from_tokens(const std::vector<std::string>& tokens);
std::vector<std::string> tokens(const WordC& w);
std::string to_string(const WordC& w);

/// r_0 -> R_n, r_i -> R_{n-i} R_{n+i}, e_0 -> E_n, e_i -> E_{n-i} E_{n+i}.
WordA phi_word(const WordC& w, int n);
/// Evaluates phi(w) on 2n strands.
Monomial eval_C(const WordC& w, int n);

/// Records whether both words evaluate to the same monomial.
void check_relation(Report& report, int n, const std::string& name, const std::string& instance,
                    const WordC& lhs, const WordC& rhs);

/// Defining relations, the derived two-generator identities, the z-identities
/// and the commuting properties of y_i and z_i, every index instantiation.
Report relation_suite_C(int n);

// ---------------------------------------------------------------------------
// Derived words

WordC y_word(int i);
WordC z_word(int i);
/// z_1 z_2 ... z_i.
WordC b_word(int i);
/// e_{p+1} e_{p+3} ... e_{i-1}.
WordC e_strip(int i, int p);
/// e_{i,p} b_i e_{i,p'}.
WordC bpip_word(int p, int i, int pp);
/// Strands (n+1-j, n+j) for j = 1..i on 2n strands.
AdmissibleSetA B_i_set(int n, int i);
/// e_{i,p} applied to B_i.
AdmissibleSetA B_set(int n, int i, int p);

/// Valid (i, p) pairs: 0 <= p <= i <= n, i - p even.
std::vector<int> valid_p(int i);

// ---------------------------------------------------------------------------
// Weyl group W(C_n) as sigma-fixed permutation diagrams on 2n strands.

inline constexpr int kDefaultWeylBound = 5;

class WeylGroup {
 public:
  struct Element {
    Diagram diagram;
    WordC word;  // shortlex-minimal in the order r_0 < r_1 < ...
  };

  /// Breadth-first closure of phi(r_0), ..., phi(r_{n-1}).
  static WeylGroup build(int n, int bound = kDefaultWeylBound);

  int rank() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const Element& operator[](int idx) const { return elements_.at(idx); }
  const std::vector<Element>& elements() const { return elements_; }
  /// Index of a diagram, or -1.
  int find(const Diagram& d) const;
  int multiply(int a, int b) const;
  int inverse(int a) const;
  int identity() const { return 0; }
  /// Subgroup generated by the given elements, as sorted indices.
  std::vector<int> closure(const std::vector<int>& generators) const;
  /// Index of the element represented by an r-word.
  int element_of(const WordC& w) const;

 private:
  int n_ = 0;
  std::vector<Element> elements_;
  std::unordered_map<Diagram, int, DiagramHash> index_;
};

struct CosetData {
  int i = 0;
  int p = 0;
  std::vector<WordC> a_generators;
  std::vector<WordC> l_generators;
  std::vector<int> a_elements;
  std::vector<int> l_elements;
  std::vector<int> n_elements;
  /// For each orbit point of B_{i,p}, the shortlex-first element reaching it.
  std::vector<int> d_reps;
  std::vector<AdmissibleSetA> orbit;
  /// Elements fixing B_{i,p}.
  std::vector<int> stabilizer;
};

CosetData stabilizer_and_cosets(const WeylGroup& w, int i, int p);
/// n! / (p! q! (n-i)!) with i - p = 2q.
BigInt orbit_size_formula(int n, int i, int p);

// ---------------------------------------------------------------------------
// Normal forms

struct NormalForm {
  int k = 0;
  int i = 0;
  int p = 0;
  int pp = 0;
  int u = 0;  // index into the Weyl group, a member of D_{i,p}
  int v = 0;  // member of L_i
  int w = 0;  // member of D_{i,p'}
};

struct BasisEntry {
  NormalForm nf;
  Diagram diagram;
};

class NormalFormBasis {
 public:
  /// Enumerates every tuple; throws std::logic_error on a repeated diagram or
  /// a non-symmetric one. n <= 4.
  static NormalFormBasis build(const WeylGroup& w);

  const WeylGroup& group() const { return *group_; }
  const std::vector<BasisEntry>& entries() const { return entries_; }
  const CosetData& cosets(int i, int p) const;
  /// Entry whose diagram equals d, or nullptr.
  const BasisEntry* find(const Diagram& d) const;
  /// delta^k u b_{p,i,p'} v w^op as a monomial (equals the bare diagram).
  Monomial evaluate(const NormalForm& nf) const;
  /// Number of entries with i horizontal strands on top.
  std::size_t layer_size(int i) const;

 private:
  const WeylGroup* group_ = nullptr;
  std::vector<BasisEntry> entries_;
  std::map<std::pair<int, int>, CosetData> cosets_;
  std::unordered_map<Diagram, int, DiagramHash> index_;
};

// ---------------------------------------------------------------------------
// Counting

/// a_k by a_k = a_{k-1} + 2(k-1) a_{k-2}, a_0 = a_1 = 1.
BigInt count_recursion(int k);
/// The double sum for a_{2n}.
BigInt count_closed(int n);
/// Sum over i of (sum_p |D_{i,p}|)^2 |L_i| from computed coset data.
BigInt count_from_cosets(const WeylGroup& w);

// ---------------------------------------------------------------------------
// Root elements

/// phi(w e_j w^{-1}) for any w carrying beta_j (j = 0 long, j = 1 short) to
/// +-beta; throws std::logic_error if two choices of w disagree.
Monomial e_root(const RootC& beta, const WeylGroup& w);
Monomial r_root(const RootC& beta, const WeylGroup& w);

struct EbWitness {
  int k = 0;  // e_beta b_{p,i,p'} = delta^k (basis element)
  NormalForm nf;
};

/// Looks e_beta b_{p,i,p'} up in the basis. Throws std::logic_error if the
/// product is not found, h is outside {i, i+1, i+2}, or h = i without w = 1
/// and m' = p'.
EbWitness rewrite_eb(const RootC& beta, int p, int i, int pp, const NormalFormBasis& basis);

/// Diagrams of the submonoid generated by the identity and the generators,
/// delta powers dropped; sorted.
std::vector<Diagram> diagram_closure(const std::vector<Diagram>& generators, int strands);

// ---------------------------------------------------------------------------
// Suites

/// Identities between e_beta, r_beta for every pair of positive roots.
Report root_pair_suite(const WeylGroup& w);
/// Orbit sizes, stabilizer orders and transitivity on sigma-invariant sets.
Report orbit_suite(const WeylGroup& w);
/// Stabilizer and L_i commuting properties of b_{p,i,i}, and the coset
/// rewriting r b_{p,i,i} = u b_{p,i,i} v.
Report coset_suite(const WeylGroup& w);
/// Injectivity of fp on sigma-invariant sets, its equivariance under the
/// simple reflections, and the admissibility examples.
Report projection_suite(int n);
/// Distinctness, symmetry and count of the normal form basis; rewrite_eb over
/// every root and (p, i, p').
Report basis_suite(const NormalFormBasis& basis);
/// The parabolic-times-{1, e_{n-1}, r_{n-1}, y_n, z_n}-times-parabolic
/// decomposition of the monoid, as diagram sets.
Report generation_suite(int n);

}  // namespace brauer
