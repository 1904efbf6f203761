#include "loopforge/monomial.hpp"

#include "loopforge/errors.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace loopforge {

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = a * 0x9e3779b97f4a7c15ull ^ (b + 0x517cc1b727220a95ull);
  h ^= h >> 29;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 32;
  return h;
}

struct PairKey {
  const Monomial::Node* left;
  const Monomial::Node* right;
  bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    return mix(reinterpret_cast<std::uintptr_t>(k.left),
               reinterpret_cast<std::uintptr_t>(k.right));
  }
};

// Nodes live for the lifetime of the process; a deque keeps them at stable
// addresses. The mutex makes interning safe for concurrent evaluators.
struct Pool {
  std::mutex lock;
  std::deque<Monomial::Node> nodes;
  std::unordered_map<int, const Monomial::Node*> leaves;
  std::unordered_map<PairKey, const Monomial::Node*, PairKeyHash> pairs;
};

Pool& pool() {
  static Pool p;
  return p;
}

}  // namespace

Monomial Monomial::generator(int id) {
  if (id < 1) throw DomainError("generator id must be >= 1");
  Pool& p = pool();
  std::lock_guard<std::mutex> guard(p.lock);
  auto it = p.leaves.find(id);
  if (it != p.leaves.end()) return Monomial(it->second);
  p.nodes.push_back(Node{id, nullptr, nullptr, 1,
                         mix(0xc2b2ae3d27d4eb4full, static_cast<std::uint64_t>(id))});
  const Node* node = &p.nodes.back();
  p.leaves.emplace(id, node);
  return Monomial(node);
}

Monomial Monomial::graft(Monomial left, Monomial right) {
  if (left.is_unit()) return right;
  if (right.is_unit()) return left;
  Pool& p = pool();
  std::lock_guard<std::mutex> guard(p.lock);
  PairKey key{left.node_, right.node_};
  auto it = p.pairs.find(key);
  if (it != p.pairs.end()) return Monomial(it->second);
  p.nodes.push_back(Node{0, left.node_, right.node_,
                         left.node_->degree + right.node_->degree,
                         mix(left.node_->hash, right.node_->hash)});
  const Node* node = &p.nodes.back();
  p.pairs.emplace(key, node);
  return Monomial(node);
}

namespace {

// Preorder structural comparison; leaves order before internal nodes.
int compare_structure(const Monomial::Node* a, const Monomial::Node* b) {
  if (a == b) return 0;
  const bool la = a->gen > 0, lb = b->gen > 0;
  if (la && lb) return a->gen < b->gen ? -1 : 1;
  if (la != lb) return la ? -1 : 1;
  if (int c = compare_structure(a->left, b->left)) return c;
  return compare_structure(a->right, b->right);
}

}  // namespace

int Monomial::compare(Monomial a, Monomial b) {
  if (a.node_ == b.node_) return 0;
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  if (a.is_unit()) return -1;
  if (b.is_unit()) return 1;
  return compare_structure(a.node_, b.node_);
}

std::string Monomial::to_string() const {
  if (is_unit()) return "1";
  if (is_leaf()) return "u" + std::to_string(gen());
  return "(" + left().to_string() + " " + right().to_string() + ")";
}

void Monomial::leaves(std::vector<int>& out) const {
  if (is_unit()) return;
  if (is_leaf()) {
    out.push_back(gen());
    return;
  }
  left().leaves(out);
  right().leaves(out);
}

}  // namespace loopforge
