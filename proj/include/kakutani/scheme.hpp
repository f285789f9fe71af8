#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kakutani/rational.hpp"

namespace kak {

enum class TailDirection { ascending, descending };

struct AtomSpec {
  Rational length;
  friend bool operator==(const AtomSpec&, const AtomSpec&) = default;
};

// Countable family of contiguous intervals with lengths first*ratio^k, k >= 0.
// Ascending lays them largest-first from the block's left edge, so the short
// intervals accumulate at the right end; descending mirrors that, accumulating
// at the left end (which keeps the point 0 free of left endpoints when such a
// block comes first).
struct GeoTailSpec {
  Rational first;
  Rational ratio;
  TailDirection direction = TailDirection::ascending;
  friend bool operator==(const GeoTailSpec&, const GeoTailSpec&) = default;
};

using BlockSpec = std::variant<AtomSpec, GeoTailSpec>;

Rational block_mass(const BlockSpec& b);

// Symbol of the (possibly countable) alphabet: (block index, depth).
// Atoms only have depth 0; a tail symbol at depth k has length first*ratio^k.
struct Symbol {
  std::uint32_t block = 0;
  std::uint32_t depth = 0;
  auto operator<=>(const Symbol&) const = default;
};

struct SymbolInfo {
  Symbol sym;
  Rational alpha;
  Rational left;
};

// An ordered partition of [0,1) into images of orientation-preserving
// similarities T_s(x) = alpha(s)*x + left(s). Immutable after build; all
// queries are pure.
class Scheme {
public:
  static Scheme build(std::vector<BlockSpec> blocks);

  const std::vector<BlockSpec>& blocks() const { return blocks_; }
  std::size_t tail_count() const { return tail_count_; }
  bool finite() const { return tail_count_ == 0; }

  Rational alpha(Symbol s) const;
  Rational left(Symbol s) const;
  std::optional<Symbol> zero_symbol() const { return zero_symbol_; }

  // Largest and smallest symbol lengths (smallest over atoms and tail heads;
  // tails have no positive lower bound).
  Rational max_alpha() const;
  // Largest ratio over tails; 0 for finite schemes.
  Rational max_tail_ratio() const;

  // All symbols with alpha >= lambda, ordered left to right, with their
  // exact lengths and left endpoints.
  std::vector<SymbolInfo> truncated_alphabet(const Rational& lambda) const;

  // Key-value config format; parse(serialize(s)) == s bit-exact.
  static Scheme parse(const std::string& text);
  std::string serialize() const;

  friend bool operator==(const Scheme& a, const Scheme& b) { return a.blocks_ == b.blocks_; }

private:
  Scheme() = default;

  std::vector<BlockSpec> blocks_;
  std::vector<Rational> block_left_;
  std::vector<Rational> block_mass_;
  std::optional<Symbol> zero_symbol_;
  std::size_t tail_count_ = 0;
};

// Finite composition word over the alphabet; empty word is the identity.
struct Word {
  std::vector<Symbol> symbols;

  bool empty() const { return symbols.empty(); }
  auto operator<=>(const Word&) const = default;
};

// Product of symbol lengths; 1 for the empty word.
Rational word_alpha(const Scheme& s, const Word& w);

// T_{i_1} o ... o T_{i_k} (0), via the right-to-left fold t <- c + alpha*t.
Rational word_left_endpoint(const Scheme& s, const Word& w);

std::string format_word(const Word& w);

}  // namespace kak
