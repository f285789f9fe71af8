#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kakutani/scheme.hpp"

namespace kak {

// Caps for the enumeration and counting engines. Exceeding one raises
// budget_exceeded_error rather than grinding on a lambda that is too small.
struct Budget {
  std::uint64_t max_words = 5'000'000;
  std::uint64_t max_memo = 1'000'000;
};

// Sorted, deduplicated left-endpoint set X_lambda.
struct PointSet {
  Rational lambda;
  std::vector<Rational> points;

  std::size_t size() const { return points.size(); }
};

// Strictly decreasing distinct word-length values l_0 = 1 > l_1 > ...
struct LengthLadder {
  std::vector<Rational> values;
};

struct PartitionEntry {
  Word word;
  Rational left;
  Rational length;
};

// One refinement level; for infinite schemes only intervals of length
// >= min_len are materialized and the rest is reported as truncated mass.
struct PartitionLevel {
  std::vector<PartitionEntry> entries;
  Rational truncated_mass;
};

// Streams every word with alpha >= lambda exactly once, in depth-first
// order with children visited in canonical symbol order. The callback
// receives the word, its alpha and its left endpoint T_v(0).
void enumerate_A(const Scheme& s, const Rational& lambda, const Budget& budget,
                 const std::function<void(const Word&, const Rational&, const Rational&)>& fn);

std::vector<Word> enumerate_A_words(const Scheme& s, const Rational& lambda,
                                    const Budget& budget = {});

// Exact |A_lambda| via the memoized renewal recursion
//   |A_t| = [t <= 1] + sum over alpha_i >= t of |A_{t/alpha_i}|.
Integer count_A(const Scheme& s, const Rational& lambda, const Budget& budget = {});

PointSet point_set(const Scheme& s, const Rational& lambda, const Budget& budget = {});

// Top n+1 distinct word lengths by lazy best-first search over the
// multiplicative semigroup (the Hamming-numbers pattern with exact values).
LengthLadder length_ladder(const Scheme& s, std::size_t n, const Budget& budget = {});

// Left endpoints of everything split within the first n+1 stages: X_{l_n}.
PointSet L_n(const Scheme& s, std::size_t n, const Budget& budget = {});

// Members of the n-th partition P_n with length >= min_len, sorted by left
// endpoint: exactly the words v with alpha_v < l_{n-1} <= alpha_parent(v).
PartitionLevel partition_level(const Scheme& s, std::size_t n, const Rational& min_len,
                               const Budget& budget = {});

// The unique n with l_n >= lambda > l_{n+1}; point_set(lambda) == L_n.
std::size_t n_of_lambda(const Scheme& s, const Rational& lambda, const Budget& budget = {});

}  // namespace kak
