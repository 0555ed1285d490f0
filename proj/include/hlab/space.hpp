#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hlab/combinatorics.hpp"
#include "hlab/errors.hpp"

namespace hlab {

// A basis vector of a SpaceExpr, encoded by positions in the child enumerations:
//   U        : {0} for 1, {1} for x
//   Field    : {}
//   Sym, D   : weakly decreasing tuple of child positions (a monomial / divided monomial);
//              over U the tuple (1,..,1,0,..,0) with j ones is x^j, resp. 1^{(d-j)}x^{(j)}
//   Wedge    : strictly decreasing tuple of child positions
//   Tensor   : (position in left factor, position in right factor)
// Enumeration order is lexicographic on these tuples.
struct BasisIndex {
  std::vector<int> parts;
  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

// Laurent polynomial in q: exponent -> coefficient.
using CharPoly = std::map<int, std::int64_t>;

inline constexpr std::size_t kMaxEnumeratedDim = 4'000'000;

class SpaceExpr {
 public:
  enum class Kind { Field, U, Sym, Divided, Wedge, Tensor };

  static SpaceExpr field() { return SpaceExpr(make(Kind::Field, 0, nullptr, nullptr)); }
  static SpaceExpr u() { return SpaceExpr(make(Kind::U, 0, nullptr, nullptr)); }
  static SpaceExpr sym(int n, const SpaceExpr& x) {
    require(n >= 0, "Sym arity must be nonnegative");
    return SpaceExpr(make(Kind::Sym, n, x.node_, nullptr));
  }
  static SpaceExpr divided(int m, const SpaceExpr& x) {
    require(m >= 0, "D arity must be nonnegative");
    return SpaceExpr(make(Kind::Divided, m, x.node_, nullptr));
  }
  static SpaceExpr wedge(int i, const SpaceExpr& x) {
    require(i >= 0, "Wedge arity must be nonnegative");
    require(static_cast<std::uint64_t>(i) <= x.dim(), "Wedge(i, X) requires i <= dim X");
    return SpaceExpr(make(Kind::Wedge, i, x.node_, nullptr));
  }
  static SpaceExpr tensor(const SpaceExpr& a, const SpaceExpr& b) {
    return SpaceExpr(make(Kind::Tensor, 0, a.node_, b.node_));
  }

  Kind kind() const { return node_->kind; }
  int arity() const { return node_->arity; }
  SpaceExpr child() const { return SpaceExpr(node_->a); }
  SpaceExpr left() const { return SpaceExpr(node_->a); }
  SpaceExpr right() const { return SpaceExpr(node_->b); }
  std::uint64_t dim() const { return node_->dim; }

  std::string to_string() const {
    switch (kind()) {
      case Kind::Field: return "k";
      case Kind::U: return "U";
      case Kind::Sym: return "Sym(" + std::to_string(arity()) + "," + child().to_string() + ")";
      case Kind::Divided: return "D(" + std::to_string(arity()) + "," + child().to_string() + ")";
      case Kind::Wedge: return "Wedge(" + std::to_string(arity()) + "," + child().to_string() + ")";
      case Kind::Tensor: return "Tensor(" + left().to_string() + "," + right().to_string() + ")";
    }
    return "?";
  }

  // Rewrites the canonical identifications that preserve basis order:
  // F(1,X) = X and F(0,X) = k for F in {Sym, D, Wedge}, F(n,k) = k, k(x)X = X(x)k = X.
  SpaceExpr normalized() const {
    switch (kind()) {
      case Kind::Field:
      case Kind::U: return *this;
      case Kind::Sym:
      case Kind::Divided:
      case Kind::Wedge: {
        SpaceExpr c = child().normalized();
        if (arity() == 0 || c.kind() == Kind::Field) return field();
        if (arity() == 1) return c;
        return SpaceExpr(make(kind(), arity(), c.node_, nullptr));
      }
      case Kind::Tensor: {
        SpaceExpr l = left().normalized(), r = right().normalized();
        if (l.kind() == Kind::Field) return r;
        if (r.kind() == Kind::Field) return l;
        return tensor(l, r);
      }
    }
    return *this;
  }
  bool isomorphic_label(const SpaceExpr& o) const { return normalized().to_string() == o.normalized().to_string(); }

  const std::vector<BasisIndex>& basis() const {
    ensure_enumerated();
    return node_->basis;
  }
  const std::vector<int>& weights() const {
    ensure_enumerated();
    return node_->weights;
  }
  // Position of a basis index in the canonical enumeration; throws if invalid.
  std::size_t index_of(const std::vector<int>& parts) const {
    ensure_enumerated();
    auto it = node_->lookup.find(parts);
    if (it == node_->lookup.end()) throw InvalidParameter("invalid basis index for " + to_string());
    return it->second;
  }
  bool contains(const std::vector<int>& parts) const {
    ensure_enumerated();
    return node_->lookup.count(parts) != 0;
  }

  // Human-readable name of the basis vector at position pos.
  std::string describe(std::size_t pos) const {
    const auto& b = basis().at(pos).parts;
    switch (kind()) {
      case Kind::Field: return "1";
      case Kind::U: return b[0] == 0 ? "1" : "x";
      case Kind::Sym:
      case Kind::Divided: {
        if (child().kind() == Kind::U) {
          int j = 0;
          for (int v : b) j += v;
          return kind() == Kind::Sym ? "x^" + std::to_string(j) : "x^(" + std::to_string(j) + ")";
        }
        std::string s = kind() == Kind::Sym ? "[" : "{";
        for (std::size_t t = 0; t < b.size(); ++t) s += (t ? "*" : "") + child().describe(b[t]);
        return s + (kind() == Kind::Sym ? "]" : "}");
      }
      case Kind::Wedge: {
        std::string s;
        for (std::size_t t = 0; t < b.size(); ++t) s += (t ? "^" : "") + child().describe(b[t]);
        return "(" + s + ")";
      }
      case Kind::Tensor: return left().describe(b[0]) + "(x)" + right().describe(b[1]);
    }
    return "?";
  }

  CharPoly character() const {
    CharPoly c;
    for (int w : weights()) c[w] += 1;
    return c;
  }

  friend bool operator==(const SpaceExpr& a, const SpaceExpr& b) { return a.to_string() == b.to_string(); }

 private:
  struct Node {
    Kind kind;
    int arity;
    std::shared_ptr<const Node> a, b;
    std::uint64_t dim;
    mutable std::once_flag once;
    mutable std::vector<BasisIndex> basis;
    mutable std::vector<int> weights;
    mutable std::map<std::vector<int>, std::size_t> lookup;
  };

  explicit SpaceExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static std::shared_ptr<const Node> make(Kind k, int arity, std::shared_ptr<const Node> a,
                                          std::shared_ptr<const Node> b) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->arity = arity;
    n->a = std::move(a);
    n->b = std::move(b);
    switch (k) {
      case Kind::Field: n->dim = 1; break;
      case Kind::U: n->dim = 2; break;
      case Kind::Sym:
      case Kind::Divided: n->dim = static_cast<std::uint64_t>(multichoose(n->a->dim, arity)); break;
      case Kind::Wedge: n->dim = static_cast<std::uint64_t>(binom(n->a->dim, arity)); break;
      case Kind::Tensor: n->dim = n->a->dim * n->b->dim; break;
    }
    return n;
  }

  void ensure_enumerated() const {
    std::call_once(node_->once, [this] { enumerate(); });
  }

  void enumerate() const {
    if (node_->dim > kMaxEnumeratedDim)
      throw ResourceLimit("basis of " + to_string() + " has " + std::to_string(node_->dim) + " elements");
    std::vector<BasisIndex>& out = node_->basis;
    std::vector<int>& w = node_->weights;
    out.reserve(node_->dim);
    switch (kind()) {
      case Kind::Field:
        out.push_back({{}});
        w.push_back(0);
        break;
      case Kind::U:
        out.push_back({{0}});
        out.push_back({{1}});
        w = {-1, 1};
        break;
      case Kind::Sym:
      case Kind::Divided:
      case Kind::Wedge: {
        SpaceExpr c = child();
        const auto& cw = c.weights();
        int n = static_cast<int>(c.dim());
        bool strict = kind() == Kind::Wedge;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int upper, int weight) -> void {
          if (static_cast<int>(cur.size()) == arity()) {
            out.push_back({cur});
            w.push_back(weight);
            return;
          }
          // First entry ranges freely; later entries are bounded by the previous one.
          int hi = cur.empty() ? n - 1 : (strict ? upper - 1 : upper);
          int remaining = arity() - static_cast<int>(cur.size()) - 1;
          for (int v = (strict ? remaining : 0); v <= hi; ++v) {
            cur.push_back(v);
            self(self, v, weight + cw[v]);
            cur.pop_back();
          }
        };
        rec(rec, n - 1, 0);
        break;
      }
      case Kind::Tensor: {
        const auto& lw = left().weights();
        const auto& rw = right().weights();
        for (std::size_t i = 0; i < lw.size(); ++i)
          for (std::size_t j = 0; j < rw.size(); ++j) {
            out.push_back({{static_cast<int>(i), static_cast<int>(j)}});
            w.push_back(lw[i] + rw[j]);
          }
        break;
      }
    }
    for (std::size_t i = 0; i < out.size(); ++i) node_->lookup.emplace(out[i].parts, i);
  }

  std::shared_ptr<const Node> node_;
};

inline const SpaceExpr& U() {
  static const SpaceExpr u = SpaceExpr::u();
  return u;
}
inline SpaceExpr SymU(int d) { return SpaceExpr::sym(d, U()); }
inline SpaceExpr DU(int m) { return SpaceExpr::divided(m, U()); }

inline bool palindromic(const CharPoly& c) {
  for (const auto& [e, v] : c) {
    auto it = c.find(-e);
    if (it == c.end() || it->second != v) return false;
  }
  return true;
}

inline std::int64_t eval_at_one(const CharPoly& c) {
  std::int64_t s = 0;
  for (const auto& [e, v] : c) s += v;
  return s;
}

}  // namespace hlab
