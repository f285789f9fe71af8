#include "kakutani/scheme.hpp"

#include <algorithm>
#include <sstream>

#include "kakutani/errors.hpp"

namespace kak {

namespace {

bool in_unit_open(const Rational& q) { return q > 0 && q < 1; }

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Rational block_mass(const BlockSpec& b) {
  if (const auto* a = std::get_if<AtomSpec>(&b)) return a->length;
  const auto& t = std::get<GeoTailSpec>(b);
  return t.first / (1 - t.ratio);
}

Scheme Scheme::build(std::vector<BlockSpec> blocks) {
  if (blocks.empty()) throw degenerate_block_error("scheme needs at least one block");
  Scheme s;
  Rational acc = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    if (const auto* a = std::get_if<AtomSpec>(&b)) {
      if (!in_unit_open(a->length))
        throw degenerate_block_error("atom length " + to_pq(a->length) + " outside (0,1)");
    } else {
      const auto& t = std::get<GeoTailSpec>(b);
      if (!in_unit_open(t.first) || !in_unit_open(t.ratio))
        throw degenerate_block_error("tail first/ratio outside (0,1)");
      if (block_mass(b) > 1)
        throw degenerate_block_error("tail mass " + to_pq(block_mass(b)) + " exceeds 1");
    }
    s.block_left_.push_back(acc);
    s.block_mass_.push_back(block_mass(b));
    acc += s.block_mass_.back();
    if (std::holds_alternative<GeoTailSpec>(b)) ++s.tail_count_;
  }
  if (acc != 1)
    throw mass_not_one_error("block lengths sum to " + to_pq(acc) + ", expected 1/1");
  s.blocks_ = std::move(blocks);

  // A left endpoint sits at 0 exactly when the first block starts with its
  // depth-0 interval at the block's left edge.
  const auto& first = s.blocks_.front();
  bool fixes_zero = std::holds_alternative<AtomSpec>(first) ||
                    std::get<GeoTailSpec>(first).direction == TailDirection::ascending;
  if (fixes_zero) s.zero_symbol_ = Symbol{0, 0};
  return s;
}

Rational Scheme::alpha(Symbol sym) const {
  const auto& b = blocks_.at(sym.block);
  if (const auto* a = std::get_if<AtomSpec>(&b)) {
    if (sym.depth != 0) throw domain_error("atom symbol with nonzero depth");
    return a->length;
  }
  const auto& t = std::get<GeoTailSpec>(b);
  return t.first * pow_rat(t.ratio, sym.depth);
}

Rational Scheme::left(Symbol sym) const {
  const auto& b = blocks_.at(sym.block);
  const Rational& base = block_left_.at(sym.block);
  if (std::holds_alternative<AtomSpec>(b)) {
    if (sym.depth != 0) throw domain_error("atom symbol with nonzero depth");
    return base;
  }
  const auto& t = std::get<GeoTailSpec>(b);
  // Sum of the first k lengths: first*(1-ratio^k)/(1-ratio).
  Rational partial = t.first * (1 - pow_rat(t.ratio, sym.depth)) / (1 - t.ratio);
  if (t.direction == TailDirection::ascending) return base + partial;
  return base + block_mass_.at(sym.block) - partial - alpha(sym);
}

Rational Scheme::max_alpha() const {
  Rational best = 0;
  for (std::uint32_t i = 0; i < blocks_.size(); ++i) {
    Rational a = alpha(Symbol{i, 0});
    if (a > best) best = a;
  }
  return best;
}

Rational Scheme::max_tail_ratio() const {
  Rational best = 0;
  for (const auto& b : blocks_)
    if (const auto* t = std::get_if<GeoTailSpec>(&b))
      if (t->ratio > best) best = t->ratio;
  return best;
}

std::vector<SymbolInfo> Scheme::truncated_alphabet(const Rational& lambda) const {
  if (lambda <= 0) throw domain_error("truncated_alphabet needs lambda > 0");
  std::vector<SymbolInfo> out;
  for (std::uint32_t i = 0; i < blocks_.size(); ++i) {
    const auto& b = blocks_[i];
    if (const auto* a = std::get_if<AtomSpec>(&b)) {
      if (a->length >= lambda) out.push_back({Symbol{i, 0}, a->length, block_left_[i]});
      continue;
    }
    const auto& t = std::get<GeoTailSpec>(b);
    Rational len = t.first;
    for (std::uint32_t k = 0; len >= lambda; ++k, len *= t.ratio)
      out.push_back({Symbol{i, k}, len, left(Symbol{i, k})});
  }
  std::sort(out.begin(), out.end(),
            [](const SymbolInfo& x, const SymbolInfo& y) { return x.left < y.left; });
  return out;
}

Scheme Scheme::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool saw_version = false;
  std::vector<BlockSpec> blocks;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw config_error("expected key = value, got: " + line);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "schema_version") {
      if (value != "1") throw config_error("unsupported schema_version: " + value);
      saw_version = true;
    } else if (key == "block") {
      std::istringstream bs(value);
      std::string kind;
      bs >> kind;
      if (kind == "atom") {
        std::string len;
        bs >> len;
        if (len.empty()) throw config_error("atom block needs a length");
        blocks.push_back(AtomSpec{parse_rational(len)});
      } else if (kind == "tail") {
        std::optional<Rational> first, ratio;
        std::optional<TailDirection> dir;
        std::string field;
        while (bs >> field) {
          auto feq = field.find('=');
          if (feq == std::string::npos) throw config_error("bad tail field: " + field);
          std::string fk = field.substr(0, feq), fv = field.substr(feq + 1);
          if (fk == "first")
            first = parse_rational(fv);
          else if (fk == "ratio")
            ratio = parse_rational(fv);
          else if (fk == "dir") {
            if (fv == "asc")
              dir = TailDirection::ascending;
            else if (fv == "desc")
              dir = TailDirection::descending;
            else
              throw config_error("tail dir must be asc or desc, got: " + fv);
          } else
            throw config_error("unknown tail field: " + fk);
        }
        if (!first || !ratio || !dir) throw config_error("tail block needs first, ratio, dir");
        blocks.push_back(GeoTailSpec{*first, *ratio, *dir});
      } else {
        throw config_error("unknown block kind: " + kind);
      }
    } else {
      throw config_error("unknown key: " + key);
    }
  }
  if (!saw_version) throw config_error("missing schema_version");
  return build(std::move(blocks));
}

std::string Scheme::serialize() const {
  std::ostringstream out;
  out << "schema_version = 1\n";
  for (const auto& b : blocks_) {
    if (const auto* a = std::get_if<AtomSpec>(&b)) {
      out << "block = atom " << to_pq(a->length) << "\n";
    } else {
      const auto& t = std::get<GeoTailSpec>(b);
      out << "block = tail first=" << to_pq(t.first) << " ratio=" << to_pq(t.ratio) << " dir="
          << (t.direction == TailDirection::ascending ? "asc" : "desc") << "\n";
    }
  }
  return out.str();
}

Rational word_alpha(const Scheme& s, const Word& w) {
  Rational a = 1;
  for (Symbol sym : w.symbols) a *= s.alpha(sym);
  return a;
}

Rational word_left_endpoint(const Scheme& s, const Word& w) {
  Rational t = 0;
  for (auto it = w.symbols.rbegin(); it != w.symbols.rend(); ++it)
    t = s.left(*it) + s.alpha(*it) * t;
  return t;
}

std::string format_word(const Word& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.symbols.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w.symbols[i].block + 1);
    if (w.symbols[i].depth) out += "." + std::to_string(w.symbols[i].depth);
  }
  return out + ")";
}

}  // namespace kak
