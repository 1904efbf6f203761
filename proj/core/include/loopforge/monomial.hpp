#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace loopforge {

// A parenthesized product of the generators u_i, stored as an immutable
// binary tree. Nodes are hash-consed in a global pool, so equality is a
// pointer comparison and shared subtrees cost nothing. The default value is
// the empty product (the unit of the algebra, degree 0); it never appears as
// a coefficient key in a Series, only as a tensor factor.
class Monomial {
 public:
  struct Node {
    std::int32_t gen;       // > 0 for a leaf u_gen, 0 for an internal node
    const Node* left;
    const Node* right;
    std::int32_t degree;    // number of leaves
    std::uint64_t hash;
  };

  Monomial() : node_(nullptr) {}

  // Leaf u_id, id >= 1.
  static Monomial generator(int id);

  // Product tree with `left` and `right` as the two children. The unit acts
  // as a multiplicative identity: graft(1, m) = graft(m, 1) = m.
  static Monomial graft(Monomial left, Monomial right);

  bool is_unit() const { return node_ == nullptr; }
  bool is_leaf() const { return node_ != nullptr && node_->gen > 0; }
  int degree() const { return node_ ? node_->degree : 0; }
  int gen() const { return node_->gen; }
  Monomial left() const { return Monomial(node_->left); }
  Monomial right() const { return Monomial(node_->right); }

  friend bool operator==(Monomial a, Monomial b) { return a.node_ == b.node_; }
  friend bool operator!=(Monomial a, Monomial b) { return a.node_ != b.node_; }

  // Canonical total order: by degree, then by preorder traversal comparing
  // node shapes and leaf ids. Used for deterministic serialization.
  friend bool operator<(Monomial a, Monomial b) { return compare(a, b) < 0; }
  static int compare(Monomial a, Monomial b);

  std::size_t hash() const { return node_ ? node_->hash : 0x9e3779b97f4a7c15ull; }

  // "u1", "(u1 u2)", "((u1 u2) u3)", ...; the unit prints as "1".
  std::string to_string() const;

  // Generator ids appearing in the tree, in leaf order with repeats.
  void leaves(std::vector<int>& out) const;

 private:
  explicit Monomial(const Node* node) : node_(node) {}
  const Node* node_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace loopforge
