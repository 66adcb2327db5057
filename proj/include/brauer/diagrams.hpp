#pragma once

#include "brauer/laurent.hpp"
#include "brauer/report.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace brauer {

// Brauer diagram on N strands: a fixed-point-free involution on 2N dots.
//
// The public API numbers dots from 1 as in the usual picture: 1..N is the top
// row left to right, N+1..2N the bottom row left to right. Internally the
// mate table is 0-based (`mates()[d]` is the partner of raw dot d).
//
// Lexicographic order on the mate table coincides with lexicographic order on
// the sorted pair list, so the defaulted comparison is the canonical order.
class Diagram {
 public:
  Diagram() = default;

  static Diagram identity(int strands);
  /// Pairs are 1-based dots; every dot must occur exactly once.
  static Diagram from_pairs(int strands, std::span<const std::pair<int, int>> pairs);
  static Diagram from_pairs(int strands, std::initializer_list<std::pair<int, int>> pairs) {
    return from_pairs(strands, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
  }
  /// 0-based mate table; validated.
  static Diagram from_mates(std::vector<std::uint8_t> mates);
  /// 0-based mate table the caller already knows to be a fixed-point-free
  /// involution.
  static Diagram from_mates_unchecked(std::vector<std::uint8_t> mates) {
    int n = static_cast<int>(mates.size() / 2);
    return Diagram(n, std::move(mates));
  }

  int strands() const { return n_; }
  int dots() const { return 2 * n_; }

  /// Partner of a 1-based dot.
  int partner(int dot) const;
  const std::vector<std::uint8_t>& mates() const { return mates_; }

  /// Sorted 1-based pairs with first < second.
  std::vector<std::pair<int, int>> pairs() const;

  int top_horizontal_count() const;
  bool is_permutation() const { return top_horizontal_count() == 0; }

  std::string to_string() const;

  auto operator<=>(const Diagram&) const = default;

 private:
  Diagram(int n, std::vector<std::uint8_t> mates) : n_(n), mates_(std::move(mates)) {}

  int n_ = 0;
  std::vector<std::uint8_t> mates_;
};

struct DiagramHash {
  std::size_t operator()(const Diagram& d) const noexcept;
};

/// delta^delta_exp * diagram.
struct Monomial {
  int delta_exp = 0;
  Diagram diagram;

  static Monomial identity(int strands) { return {0, Diagram::identity(strands)}; }
  int strands() const { return diagram.strands(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

std::string to_string(const Monomial& m);

Diagram generator_R(int strands, int i);
Diagram generator_E(int strands, int i);

/// Concatenation with a above b; each closed loop contributes one delta.
Monomial multiply(const Monomial& a, const Monomial& b);
inline Monomial operator*(const Monomial& a, const Monomial& b) { return multiply(a, b); }

/// Mirror in the central vertical axis: dot j -> N+1-j on each row.
Diagram sigma(const Diagram& d);
Monomial sigma(const Monomial& m);
bool is_symmetric(const Diagram& d);

/// Swap the top and bottom rows. For permutation diagrams this is inversion.
Diagram op(const Diagram& d);
Monomial op(const Monomial& m);

/// Number of strand pairs whose endpoints alternate around the boundary
/// (top row left to right, then bottom row right to left).
int height(const Diagram& d);

// ---------------------------------------------------------------------------
// Words

enum class LetterKind : std::uint8_t { Reflection, Quasi, Delta, DeltaInverse };

struct Letter {
  LetterKind kind = LetterKind::Delta;
  int index = 0;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Word in R_i, E_i, delta, delta^-1. Tokens: "R3", "E1", "d", "D".
struct WordA {
  std::vector<Letter> letters;
  friend bool operator==(const WordA&, const WordA&) = default;
};

WordA operator*(WordA a, const WordA& b);
WordA word_R(int i);
WordA word_E(int i);

WordA parse_word_a(std::string_view comma_separated);
WordA word_a_from_tokens(const std::vector<std::string>& tokens);
std::vector<std::string> tokens(const WordA& w);

/// Left-to-right product of generator monomials; empty word is the identity.
Monomial evaluate_word(const WordA& w, int strands);

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr int kDefaultEnumerationBound = 8;

/// Calls `visit` on every diagram of the given strand count, in canonical
/// order.
void for_each_diagram(int strands, const std::function<void(const Diagram&)>& visit,
                      int bound = kDefaultEnumerationBound);
std::vector<Diagram> enumerate_diagrams(int strands, int bound = kDefaultEnumerationBound);

/// (2N-1)!!
BigInt diagram_count(int strands);

/// Number of mirror-symmetric diagrams, counted by enumeration. Splits the
/// sweep over `jobs` threads.
std::uint64_t count_symmetric_diagrams(int strands, int jobs = 1,
                                       int bound = kDefaultEnumerationBound);

// ---------------------------------------------------------------------------
// Free module over Z[delta^{+-1}] with diagram basis

class AlgebraElement {
 public:
  explicit AlgebraElement(int strands = 0) : strands_(strands) {}
  static AlgebraElement from_monomial(const Monomial& m, const LaurentPoly& coeff = LaurentPoly::constant(1));

  int strands() const { return strands_; }
  const std::map<Diagram, LaurentPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  LaurentPoly coeff(const Diagram& d) const;

  void add_term(const Diagram& d, const LaurentPoly& c);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const LaurentPoly& s, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  int strands_;
  std::map<Diagram, LaurentPoly> coeffs_;
};

AlgebraElement algebra_multiply(const AlgebraElement& a, const AlgebraElement& b);

// ---------------------------------------------------------------------------

/// Defining relations of the type A Brauer algebra on N strands together with
/// the consequences for chains i~j~k, every index instantiation.
Report relation_suite_A(int strands);

}  // namespace brauer

template <>
struct std::hash<brauer::Diagram> : brauer::DiagramHash {};
