#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torslat/quiver_rep.hpp"

namespace torslat {

/// Indecomposable RA_n module as an oriented interval string.
///
/// Vertices are 1..n. The module is supported on [p, q] and `word[k]`
/// records which arrow acts on the edge between p+k and p+k+1:
/// 'R' for the raising arrow a_i : i -> i+1, 'L' for the lowering arrow
/// a_i* : i+1 -> i. Simples have an empty word.
struct StringModule {
  int n = 1;
  int p = 1;
  int q = 1;
  std::string word;

  static StringModule simple(int n, int i) { return {n, i, i, ""}; }

  /// Validating constructor; throws InvalidArgument on a malformed module.
  static StringModule make(int n, int p, int q, std::string word);

  int length() const noexcept { return q - p + 1; }
  bool is_simple() const noexcept { return p == q; }
  bool contains(int vertex) const noexcept { return p <= vertex && vertex <= q; }

  /// Orientation of edge i (between vertices i and i+1); requires p <= i < q.
  char edge(int i) const { return word.at(static_cast<std::size_t>(i - p)); }

  /// Canonical order: support (p, then q), then word with L < R.
  friend auto operator<=>(const StringModule& a, const StringModule& b) {
    if (auto c = a.p <=> b.p; c != 0) return c;
    if (auto c = a.q <=> b.q; c != 0) return c;
    if (auto c = a.word <=> b.word; c != 0) return c;
    return a.n <=> b.n;
  }
  friend bool operator==(const StringModule&, const StringModule&) = default;
};

/// inv(M) = (p-1, q), the value pair this module contributes to an inversion set.
struct InversionPair {
  int lo = 0;
  int hi = 1;
  friend auto operator<=>(const InversionPair&, const InversionPair&) = default;
};

std::vector<StringModule> enumerate_indecomposables(int n);

/// Closed-form count sum_{l=1..n} (n-l+1) 2^{l-1}.
std::size_t indecomposable_count(int n);

StringModule substring(const StringModule& m, int s, int t);

/// Substrings whose quiver is predecessor closed in m (m's indecomposable quotients).
std::vector<StringModule> indecomposable_factors(const StringModule& m);
/// Substrings whose quiver is successor closed in m (m's indecomposable submodules).
std::vector<StringModule> indecomposable_submodules(const StringModule& m);

bool is_factor_interval(const StringModule& m, int s, int t);
bool is_submodule_interval(const StringModule& m, int s, int t);

/// dim Hom(m, m2): common substrings that are quotients of m and submodules of m2.
int hom_dim(const StringModule& m, const StringModule& m2);
/// dim Hom(m, m2) from the commuting conditions, by exact rational elimination.
int hom_dim_oracle(const StringModule& m, const StringModule& m2);

bool is_brick(const StringModule& m);

/// Unique nonsplit extension 0 -> sub -> E -> quot -> 0 with E indecomposable,
/// or nullopt when the supports are not adjacent.
std::optional<StringModule> glue(const StringModule& sub, const StringModule& quot);

StringModule dualize(const StringModule& m);

InversionPair inv_pair(const StringModule& m);

/// Compact text form: "p-q:WORD", or "i" for a simple.
std::string to_text(const StringModule& m);
std::string to_json(const StringModule& m);
/// Accepts the text form or the JSON object form.
StringModule parse_module(int n, const std::string& text);

/// The string as a quiver representation: k on every supported vertex and
/// the identity on each arrow in the word.
QuiverRep to_representation(const StringModule& m);

}  // namespace torslat
