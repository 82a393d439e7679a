#pragma once

// Shared generic-value tree, payload tokens, index vocabularies and value
// transformers. Every universe judges the same tree type; which constructors
// are legal where is decided by the per-universe conformance checks.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dgp/error.hpp"

namespace dgp {

// ---------------------------------------------------------------------------
// Index labels and index sets

enum class Side : std::uint8_t { Left, Right };

/// An index name, possibly wrapped in Left/Right tags from disjoint unions.
/// `tags` lists the wrappers outermost first.
class IndexLabel {
 public:
  IndexLabel() = default;
  explicit IndexLabel(std::string base) : base_(std::move(base)) {}

  static IndexLabel left(const IndexLabel& inner) { return inner.wrapped(Side::Left); }
  static IndexLabel right(const IndexLabel& inner) { return inner.wrapped(Side::Right); }

  bool is_tagged() const noexcept { return !tags_.empty(); }
  Side side() const { return tags_.front(); }

  /// The label with its outermost tag removed. Precondition: is_tagged().
  IndexLabel untagged() const {
    IndexLabel out = *this;
    out.tags_.erase(out.tags_.begin());
    return out;
  }

  const std::string& base() const noexcept { return base_; }
  const std::vector<Side>& tags() const noexcept { return tags_; }

  std::string to_string() const {
    std::string out;
    for (Side s : tags_) out += s == Side::Left ? "inl." : "inr.";
    return out + base_;
  }

  friend bool operator==(const IndexLabel&, const IndexLabel&) = default;
  friend auto operator<=>(const IndexLabel&, const IndexLabel&) = default;

 private:
  IndexLabel wrapped(Side s) const {
    IndexLabel out = *this;
    out.tags_.insert(out.tags_.begin(), s);
    return out;
  }

  std::vector<Side> tags_;
  std::string base_;
};

/// The unit index `⋆`, sole inhabitant of a one-element index set.
inline IndexLabel star() { return IndexLabel("⋆"); }

/// Finite, duplicate-free, insertion-ordered set of index labels.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<IndexLabel> labels) {
    for (const auto& l : labels) insert(l);
  }
  explicit IndexSet(const std::vector<IndexLabel>& labels) {
    for (const auto& l : labels) insert(l);
  }

  /// Returns false (and leaves the set unchanged) on a duplicate.
  bool insert(const IndexLabel& l) {
    if (contains(l)) return false;
    labels_.push_back(l);
    return true;
  }

  bool contains(const IndexLabel& l) const {
    return std::find(labels_.begin(), labels_.end(), l) != labels_.end();
  }

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }
  const std::vector<IndexLabel>& labels() const noexcept { return labels_; }

  std::string to_string() const {
    std::string out;
    for (const auto& l : labels_) {
      if (!out.empty()) out += ' ';
      out += l.to_string();
    }
    return out;
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<IndexLabel> labels_;
};

/// {Left a | a ∈ lhs} ∪ {Right b | b ∈ rhs}.
inline IndexSet disjoint_union(const IndexSet& lhs, const IndexSet& rhs) {
  IndexSet out;
  for (const auto& l : lhs) out.insert(IndexLabel::left(l));
  for (const auto& l : rhs) out.insert(IndexLabel::right(l));
  return out;
}

inline IndexSet unit_index_set() { return IndexSet{star()}; }

// ---------------------------------------------------------------------------
// Payload tokens

/// Sort whose only inhabitant is `tt` rather than a token.
inline const std::string kTopSort = "⊤";
/// Sort with no inhabitants at all.
inline const std::string kBottomSort = "⊥";

struct PayloadToken {
  std::string sort;
  std::uint64_t id = 0;

  friend bool operator==(const PayloadToken&, const PayloadToken&) = default;
  friend auto operator<=>(const PayloadToken&, const PayloadToken&) = default;
};

// ---------------------------------------------------------------------------
// Generic values

enum class Kind : std::uint8_t { TT, In1, In2, Pair, Roll, Payload, Refl, Konst, RecV };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::TT: return "tt";
    case Kind::In1: return "in1";
    case Kind::In2: return "in2";
    case Kind::Pair: return "pair";
    case Kind::Roll: return "roll";
    case Kind::Payload: return "payload";
    case Kind::Refl: return "refl";
    case Kind::Konst: return "k";
    case Kind::RecV: return "rec";
  }
  return "?";
}

inline bool is_unary(Kind k) {
  return k == Kind::In1 || k == Kind::In2 || k == Kind::Roll || k == Kind::Konst ||
         k == Kind::RecV;
}

/// Immutable value tree with shared structure. Copies are cheap.
class Value {
 public:
  /// Default-constructs `tt`.
  Value() : node_(shared_leaf(Kind::TT)) {}

  static Value tt() { return Value(); }
  static Value refl() { return Value(shared_leaf(Kind::Refl)); }
  static Value in1(Value v) { return unary(Kind::In1, std::move(v)); }
  static Value in2(Value v) { return unary(Kind::In2, std::move(v)); }
  static Value roll(Value v) { return unary(Kind::Roll, std::move(v)); }
  static Value konst(Value v) { return unary(Kind::Konst, std::move(v)); }
  static Value rec(Value v) { return unary(Kind::RecV, std::move(v)); }

  static Value pair(Value a, Value b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Pair;
    n->size = 1 + a.size() + b.size();
    n->depth = 1 + std::max(a.depth(), b.depth());
    n->first = std::move(a.node_);
    n->second = std::move(b.node_);
    return Value(std::move(n));
  }

  static Value payload(std::string sort, std::uint64_t id) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Payload;
    n->token = PayloadToken{std::move(sort), id};
    return Value(std::move(n));
  }
  static Value payload(PayloadToken t) { return payload(std::move(t.sort), t.id); }

  /// Rebuilds a unary node of kind `k`.
  static Value unary(Kind k, Value v) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->size = 1 + v.size();
    n->depth = 1 + v.depth();
    n->first = std::move(v.node_);
    return Value(std::move(n));
  }

  Kind kind() const noexcept { return node_->kind; }
  bool is(Kind k) const noexcept { return node_->kind == k; }

  /// Child of a unary node.
  Value child() const { return Value(node_->first); }
  Value first() const { return Value(node_->first); }
  Value second() const { return Value(node_->second); }
  const PayloadToken& token() const { return node_->token; }

  /// Node count.
  std::size_t size() const noexcept { return node_->size; }
  std::size_t depth() const noexcept { return node_->depth; }

  friend bool operator==(const Value& a, const Value& b) { return compare(a, b) == 0; }
  friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
    const int c = compare(a, b);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  struct Node {
    Kind kind = Kind::TT;
    std::size_t size = 1;
    std::size_t depth = 1;
    PayloadToken token;
    std::shared_ptr<const Node> first;
    std::shared_ptr<const Node> second;
  };

  explicit Value(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static std::shared_ptr<const Node> shared_leaf(Kind k) {
    static const auto tt = std::make_shared<const Node>(Node{Kind::TT, 1, 1, {}, nullptr, nullptr});
    static const auto refl = std::make_shared<const Node>(Node{Kind::Refl, 1, 1, {}, nullptr, nullptr});
    return k == Kind::TT ? tt : refl;
  }

  // Size first, then constructor, then token, then children left to right.
  static int compare(const Value& a, const Value& b) {
    if (a.node_ == b.node_) return 0;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
      case Kind::TT:
      case Kind::Refl:
        return 0;
      case Kind::Payload: {
        const auto c = a.token() <=> b.token();
        return c < 0 ? -1 : c > 0 ? 1 : 0;
      }
      case Kind::Pair: {
        if (int c = compare(a.first(), b.first()); c != 0) return c;
        return compare(a.second(), b.second());
      }
      default:
        return compare(a.child(), b.child());
    }
  }

  std::shared_ptr<const Node> node_;
};

/// Canonical value DSL text; the exact inverse of dsl::parse_value.
inline std::string to_string(const Value& v) {
  switch (v.kind()) {
    case Kind::TT: return "tt";
    case Kind::Refl: return "refl";
    case Kind::Payload: return v.token().sort + "#" + std::to_string(v.token().id);
    case Kind::Pair: return "(" + to_string(v.first()) + " , " + to_string(v.second()) + ")";
    case Kind::Roll: return "<" + to_string(v.child()) + ">";
    default: return std::string(kind_name(v.kind())) + " " + to_string(v.child());
  }
}

inline std::ostream& operator<<(std::ostream& os, const Value& v) { return os << to_string(v); }

inline std::size_t value_size(const Value& v) { return v.size(); }
inline bool value_equal(const Value& a, const Value& b) { return a == b; }

/// Number of Roll/RecV wrappers along the deepest path.
inline std::size_t unfold_depth(const Value& v) {
  switch (v.kind()) {
    case Kind::Pair:
      return std::max(unfold_depth(v.first()), unfold_depth(v.second()));
    case Kind::Roll:
    case Kind::RecV:
      return 1 + unfold_depth(v.child());
    default:
      return is_unary(v.kind()) ? unfold_depth(v.child()) : 0;
  }
}

// ---------------------------------------------------------------------------
// Transformers

/// Total mapping on values; the argument of every generic map.
using Transformer = std::function<Value(const Value&)>;

inline Transformer identity() {
  return [](const Value& v) { return v; };
}

/// Payload(s, n) ↦ Payload(s, n + 1).
inline Transformer successor() {
  return [](const Value& v) {
    if (!v.is(Kind::Payload)) throw MalformedValue("successor applied to a non-payload value");
    return Value::payload(v.token().sort, v.token().id + 1);
  };
}

/// (f ∘ g)(v) = f(g(v)).
inline Transformer compose(Transformer f, Transformer g) {
  return [f = std::move(f), g = std::move(g)](const Value& v) { return f(g(v)); };
}

/// Index-respecting family of transformers, r ⇉ s.
using IxTransform = std::function<Value(const IndexLabel&, const Value&)>;

inline IxTransform identity_ix() {
  return [](const IndexLabel&, const Value& v) { return v; };
}

/// The same transformer at every index.
inline IxTransform uniform(Transformer f) {
  return [f = std::move(f)](const IndexLabel&, const Value& v) { return f(v); };
}

/// `f` at index `at`, identity elsewhere.
inline IxTransform only_at(IndexLabel at, Transformer f) {
  return [at = std::move(at), f = std::move(f)](const IndexLabel& i, const Value& v) {
    return i == at ? f(v) : v;
  };
}

/// Pointwise composition f ∘⇉ g.
inline IxTransform compose_ix(IxTransform f, IxTransform g) {
  return [f = std::move(f), g = std::move(g)](const IndexLabel& i, const Value& v) {
    return f(i, g(i, v));
  };
}

// ---------------------------------------------------------------------------
// Slots shared by several universes

/// Admits payload tokens of one sort. `⊤` admits exactly `tt`; `⊥` admits nothing.
struct PayloadSlot {
  std::string sort;

  bool accepts(const Value& v) const {
    if (sort == kTopSort) return v.is(Kind::TT);
    if (sort == kBottomSort) return false;
    return v.is(Kind::Payload) && v.token().sort == sort;
  }

  friend bool operator==(const PayloadSlot&, const PayloadSlot&) = default;
};

/// Admits no value.
struct EmptySlot {
  friend bool operator==(const EmptySlot&, const EmptySlot&) = default;
};

/// Decrements a fuel counter, throwing when none is left.
inline std::size_t spend(std::size_t fuel) {
  if (fuel == 0) throw FuelExhausted();
  return fuel - 1;
}

}  // namespace dgp
