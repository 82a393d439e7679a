#pragma once

// Exact-size enumeration of regular tree grammars. Symbols are interned by a
// string key and expanded lazily, so recursive grammars (μ types, named IG
// codes) are finite objects; results are memoised per (symbol, size).

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "dgp/value.hpp"

namespace dgp::oracle {

struct Production {
  enum class Tag : std::uint8_t { Leaf, Unary, Pair, Alias } tag;
  Value leaf;
  Kind kind = Kind::TT;
  std::size_t a = 0, b = 0;

  static Production make_leaf(Value v) { return {Tag::Leaf, std::move(v), Kind::TT, 0, 0}; }
  static Production make_unary(Kind k, std::size_t sym) { return {Tag::Unary, {}, k, sym, 0}; }
  static Production make_pair(std::size_t x, std::size_t y) { return {Tag::Pair, {}, Kind::Pair, x, y}; }
  /// Same language as another symbol, at no cost in size.
  static Production make_alias(std::size_t sym) { return {Tag::Alias, {}, Kind::TT, sym, 0}; }
};

class Grammar {
 public:
  using Expander = std::function<std::vector<Production>(Grammar&)>;

  /// Interns `key`; `expand` runs once, on first enumeration, and only if the key is new.
  std::size_t symbol(const std::string& key, Expander expand) {
    if (const auto it = index_.find(key); it != index_.end()) return it->second;
    const std::size_t id = entries_.size();
    entries_.push_back(Entry{key, std::move(expand), false, {}, {}, {}});
    index_.emplace(key, id);
    return id;
  }

  const std::string& key(std::size_t sym) const { return entries_.at(sym).key; }
  std::size_t symbol_count() const noexcept { return entries_.size(); }

  /// All words of the symbol with exactly `n` nodes, sorted, no duplicates.
  const std::vector<Value>& exact(std::size_t sym, std::size_t n) {
    Entry& e = entries_.at(sym);
    if (const auto it = e.memo.find(n); it != e.memo.end()) return it->second;
    if (e.busy.count(n) != 0) throw Error("grammar cycle without progress at " + e.key);
    if (!e.expanded) {
      e.prods = e.expand(*this);
      e.expanded = true;
    }
    e.busy[n] = true;
    std::vector<Value> out;
    for (const Production& p : e.prods) {
      switch (p.tag) {
        case Production::Tag::Leaf:
          if (p.leaf.size() == n) out.push_back(p.leaf);
          break;
        case Production::Tag::Unary:
          if (n >= 2)
            for (const Value& c : exact(p.a, n - 1)) out.push_back(Value::unary(p.kind, c));
          break;
        case Production::Tag::Pair:
          for (std::size_t left = 1; left + 2 <= n; ++left) {
            const std::vector<Value>& xs = exact(p.a, left);
            if (xs.empty()) continue;
            const std::vector<Value>& ys = exact(p.b, n - 1 - left);
            for (const Value& x : xs)
              for (const Value& y : ys) out.push_back(Value::pair(x, y));
          }
          break;
        case Production::Tag::Alias: {
          const std::vector<Value>& xs = exact(p.a, n);
          out.insert(out.end(), xs.begin(), xs.end());
          break;
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    e.busy.erase(n);
    return e.memo.emplace(n, std::move(out)).first->second;
  }

  /// Every word of size ≤ max_size, in size-then-structure order.
  std::vector<Value> up_to(std::size_t sym, std::size_t max_size) {
    std::vector<Value> out;
    for (std::size_t n = 1; n <= max_size; ++n) {
      const std::vector<Value>& xs = exact(sym, n);
      out.insert(out.end(), xs.begin(), xs.end());
    }
    return out;
  }

 private:
  struct Entry {
    std::string key;
    Expander expand;
    bool expanded;
    std::vector<Production> prods;
    std::map<std::size_t, std::vector<Value>> memo;
    std::map<std::size_t, bool> busy;
  };

  std::deque<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace dgp::oracle
