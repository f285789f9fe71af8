#include "kakutani/enumerate.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "kakutani/errors.hpp"

namespace kak {

namespace {

// Symbols with alpha >= lambda in canonical (block, depth) order, alphas only.
// Cheaper than Scheme::truncated_alphabet when left endpoints are not needed.
void for_each_symbol_geq(const Scheme& s, const Rational& lambda,
                         const std::function<void(Symbol, const Rational&)>& fn) {
  const auto& blocks = s.blocks();
  for (std::uint32_t i = 0; i < blocks.size(); ++i) {
    if (const auto* a = std::get_if<AtomSpec>(&blocks[i])) {
      if (a->length >= lambda) fn(Symbol{i, 0}, a->length);
      continue;
    }
    const auto& t = std::get<GeoTailSpec>(blocks[i]);
    Rational len = t.first;
    for (std::uint32_t k = 0; len >= lambda; ++k, len *= t.ratio) fn(Symbol{i, k}, len);
  }
}

struct DfsCtx {
  const Scheme& s;
  const Rational& lambda;
  const Budget& budget;
  const std::function<void(const Word&, const Rational&, const Rational&)>& fn;
  std::uint64_t emitted = 0;
  Word word;

  void visit(const Rational& alpha, const Rational& left) {
    if (++emitted > budget.max_words)
      throw budget_exceeded_error("enumerate_A exceeded word budget");
    fn(word, alpha, left);
    // T_{v*s}(0) = T_v(left(s)) = left_v + alpha_v * left(s).
    for_each_symbol_geq(s, lambda / alpha, [&](Symbol sym, const Rational& sa) {
      word.symbols.push_back(sym);
      visit(alpha * sa, left + alpha * s.left(sym));
      word.symbols.pop_back();
    });
  }
};

}  // namespace

void enumerate_A(const Scheme& s, const Rational& lambda, const Budget& budget,
                 const std::function<void(const Word&, const Rational&, const Rational&)>& fn) {
  if (lambda <= 0) throw domain_error("enumerate_A needs lambda > 0");
  if (lambda > 1) return;
  DfsCtx ctx{s, lambda, budget, fn};
  ctx.visit(1, 0);
}

std::vector<Word> enumerate_A_words(const Scheme& s, const Rational& lambda,
                                    const Budget& budget) {
  std::vector<Word> out;
  enumerate_A(s, lambda, budget,
              [&](const Word& w, const Rational&, const Rational&) { out.push_back(w); });
  return out;
}

namespace {

Integer count_A_memo(const Scheme& s, const Rational& lambda, const Budget& budget,
                     std::map<Rational, Integer>& memo) {
  if (lambda > 1) return 0;
  auto it = memo.find(lambda);
  if (it != memo.end()) return it->second;
  if (memo.size() >= budget.max_memo)
    throw budget_exceeded_error("count_A exceeded memo budget");
  Integer total = 1;  // the empty word
  for_each_symbol_geq(s, lambda, [&](Symbol, const Rational& a) {
    total += count_A_memo(s, lambda / a, budget, memo);
  });
  memo.emplace(lambda, total);
  return total;
}

}  // namespace

Integer count_A(const Scheme& s, const Rational& lambda, const Budget& budget) {
  if (lambda <= 0) throw domain_error("count_A needs lambda > 0");
  std::map<Rational, Integer> memo;
  return count_A_memo(s, lambda, budget, memo);
}

PointSet point_set(const Scheme& s, const Rational& lambda, const Budget& budget) {
  PointSet ps;
  ps.lambda = lambda;
  enumerate_A(s, lambda, budget, [&](const Word&, const Rational&, const Rational& left) {
    ps.points.push_back(left);
  });
  std::sort(ps.points.begin(), ps.points.end());
  ps.points.erase(std::unique(ps.points.begin(), ps.points.end()), ps.points.end());
  return ps;
}

namespace {

// Lazy best-first enumeration of distinct semigroup products. Entries name a
// product parent*alpha(block, depth); tail entries push their next-depth
// sibling on pop, so only a finite frontier of each infinite tail is live.
struct LadderEntry {
  Rational value;
  Rational parent;
  std::uint32_t block;
  std::uint32_t depth;
};

struct LadderCmp {
  bool operator()(const LadderEntry& a, const LadderEntry& b) const { return a.value < b.value; }
};

class LadderStream {
public:
  LadderStream(const Scheme& s, const Budget& budget) : s_(s), budget_(budget) {}

  // Next distinct value, strictly below the previous one.
  Rational next() {
    if (first_) {
      first_ = false;
      push_children(1);
      last_ = 1;
      return 1;
    }
    while (true) {
      if (++pops_ > budget_.max_words)
        throw budget_exceeded_error("length_ladder exceeded pop budget");
      if (heap_.empty()) throw invariant_error("length ladder ran dry");  // cannot happen
      LadderEntry e = heap_.top();
      heap_.pop();
      if (std::holds_alternative<GeoTailSpec>(s_.blocks()[e.block])) {
        const auto& t = std::get<GeoTailSpec>(s_.blocks()[e.block]);
        heap_.push({e.value * t.ratio, e.parent, e.block, e.depth + 1});
      }
      if (e.value == last_) continue;
      last_ = e.value;
      push_children(e.value);
      return e.value;
    }
  }

private:
  void push_children(const Rational& value) {
    for (std::uint32_t i = 0; i < s_.blocks().size(); ++i)
      heap_.push({value * s_.alpha(Symbol{i, 0}), value, i, 0});
  }

  const Scheme& s_;
  const Budget& budget_;
  std::priority_queue<LadderEntry, std::vector<LadderEntry>, LadderCmp> heap_;
  Rational last_;
  bool first_ = true;
  std::uint64_t pops_ = 0;
};

}  // namespace

LengthLadder length_ladder(const Scheme& s, std::size_t n, const Budget& budget) {
  LadderStream stream(s, budget);
  LengthLadder ladder;
  for (std::size_t i = 0; i <= n; ++i) ladder.values.push_back(stream.next());
  return ladder;
}

PointSet L_n(const Scheme& s, std::size_t n, const Budget& budget) {
  return point_set(s, length_ladder(s, n, budget).values.back(), budget);
}

namespace {

struct LevelCtx {
  const Scheme& s;
  const Rational& threshold;  // l_{n-1}
  const Rational& min_len;
  const Budget& budget;
  PartitionLevel out;
  std::uint64_t nodes = 0;
  Word word;

  void expand(const Rational& alpha, const Rational& left) {
    if (++nodes > budget.max_words)
      throw budget_exceeded_error("partition_level exceeded node budget");
    Rational cutoff = std::min(threshold, min_len) / alpha;
    Rational covered = 0;
    for_each_symbol_geq(s, cutoff, [&](Symbol sym, const Rational& sa) {
      covered += sa;
      Rational ca = alpha * sa;
      Rational cl = left + alpha * s.left(sym);
      word.symbols.push_back(sym);
      if (ca >= threshold) {
        expand(ca, cl);
      } else if (ca >= min_len) {
        out.entries.push_back({word, cl, ca});
      } else {
        out.truncated_mass += ca;
      }
      word.symbols.pop_back();
    });
    out.truncated_mass += alpha * (1 - covered);
  }
};

}  // namespace

PartitionLevel partition_level(const Scheme& s, std::size_t n, const Rational& min_len,
                               const Budget& budget) {
  if (min_len <= 0) throw domain_error("partition_level needs min_len > 0");
  PartitionLevel out;
  out.truncated_mass = 0;
  if (n == 0) {
    out.entries.push_back({Word{}, Rational(0), Rational(1)});
    return out;
  }
  Rational threshold = length_ladder(s, n - 1, budget).values.back();
  LevelCtx ctx{s, threshold, min_len, budget};
  ctx.out.truncated_mass = 0;
  ctx.expand(1, 0);
  out = std::move(ctx.out);
  std::sort(out.entries.begin(), out.entries.end(),
            [](const PartitionEntry& a, const PartitionEntry& b) { return a.left < b.left; });
  return out;
}

std::size_t n_of_lambda(const Scheme& s, const Rational& lambda, const Budget& budget) {
  if (lambda <= 0 || lambda > 1) throw domain_error("n_of_lambda needs lambda in (0,1]");
  LadderStream stream(s, budget);
  std::size_t n = 0;
  stream.next();  // l_0 = 1 >= lambda
  while (stream.next() >= lambda) ++n;
  return n;
}

}  // namespace kak
