#include "loopforge/decomposition.hpp"

namespace loopforge {

std::string BlockVar::to_string() const {
  std::string out(1, block);
  if (index > 0) out += std::to_string(index);
  return out;
}

BracketExpr ElementaryBracket::to_bracket_expr() const {
  std::vector<BracketExpr> slots;
  slots.reserve(args.size());
  for (int i = 1; i <= static_cast<int>(args.size()); ++i)
    slots.push_back(BracketExpr::make_slot(i));
  if (indices.level() == 0) {
    if (base == BaseOp::Associator) return BracketExpr::assoc(slots[0], slots[1], slots[2]);
    if (base == BaseOp::Commutator) return BracketExpr::comm(slots[0], slots[1]);
  }
  return BracketExpr::dev(base, indices, std::move(slots));
}

std::string ElementaryBracket::to_string() const {
  std::string out = base == BaseOp::Associator ? "(" : "(" + ::loopforge::to_string(base) + ";";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ",";
    out += args[i].to_string();
  }
  out += ")";
  if (indices.level() > 0) {
    out += "_{";
    for (std::size_t i = 0; i < indices.alphas.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(indices.alphas[i]);
    }
    out += "}";
  }
  return out;
}

std::string PiDecomposition::to_string() const {
  std::function<std::string(int)> go = [&](int node) -> std::string {
    const Node& n = nodes[node];
    if (n.leaf >= 0) return leaves[n.leaf].to_string();
    return "(" + go(n.left) + " " + go(n.right) + ")";
  };
  return root >= 0 ? go(root) : "";
}

namespace {

// A bracket instance whose arguments are still (right-normed) products of
// atoms: args[i] is the factor sequence of argument i+1.
struct Instance {
  DeviationIndices indices;
  std::vector<std::vector<BlockVar>> args;
};

struct Builder {
  BaseOp base;
  PiDecomposition out;

  int add_leaf(const Instance& inst) {
    ElementaryBracket leaf;
    leaf.base = base;
    leaf.indices = inst.indices;
    for (const auto& arg : inst.args) leaf.args.push_back(arg.front());
    out.leaves.push_back(std::move(leaf));
    out.nodes.push_back({static_cast<int>(out.leaves.size()) - 1, -1, -1});
    return static_cast<int>(out.nodes.size()) - 1;
  }

  int add_node(int left, int right) {
    out.nodes.push_back({-1, left, right});
    return static_cast<int>(out.nodes.size()) - 1;
  }

  // X(u v_rest) = (X(u) X(v_rest)) * dev(..., u, v_rest, ...): expands the
  // first non-atomic argument, recursing until all arguments are atoms.
  int expand(const Instance& inst) {
    int split = -1;
    for (std::size_t i = 0; i < inst.args.size(); ++i)
      if (inst.args[i].size() > 1) {
        split = static_cast<int>(i);
        break;
      }
    if (split < 0) return add_leaf(inst);

    const std::vector<BlockVar>& factors = inst.args[split];
    std::vector<BlockVar> head{factors.front()};
    std::vector<BlockVar> tail(factors.begin() + 1, factors.end());

    Instance with_head = inst;
    with_head.args[split] = head;
    Instance with_tail = inst;
    with_tail.args[split] = tail;

    Instance dev_inst;
    dev_inst.indices = inst.indices;
    dev_inst.indices.alphas.push_back(split + 1);  // 1-based split position
    dev_inst.args.reserve(inst.args.size() + 1);
    for (std::size_t i = 0; i < inst.args.size(); ++i) {
      if (static_cast<int>(i) == split) {
        dev_inst.args.push_back(head);
        dev_inst.args.push_back(tail);
      } else {
        dev_inst.args.push_back(inst.args[i]);
      }
    }

    const int left = expand(with_head);
    const int right = expand(with_tail);
    const int pair = add_node(left, right);
    const int dev = expand(dev_inst);
    return add_node(pair, dev);
  }
};

std::vector<BlockVar> make_block(char name, int count) {
  std::vector<BlockVar> out;
  out.reserve(count);
  for (int i = 1; i <= count; ++i) out.push_back(BlockVar{name, i});
  return out;
}

PiDecomposition decompose(BaseOp base, std::vector<std::vector<BlockVar>> args, int p, int q) {
  Builder builder{base, {}};
  builder.out.base = base;
  builder.out.p = p;
  builder.out.q = q;
  Instance start{DeviationIndices{}, std::move(args)};
  builder.out.root = builder.expand(start);
  return std::move(builder.out);
}

}  // namespace

PiDecomposition decompose_associator(int p, int q) {
  if (p < 1 || q < 1) throw DomainError("decompose_associator: p, q must be >= 1");
  return decompose(BaseOp::Associator,
                   {{BlockVar{'a', 0}}, make_block('b', p), make_block('c', q)}, p, q);
}

PiDecomposition decompose_anti_associator(int p, int q) {
  if (p < 1 || q < 1) throw DomainError("decompose_anti_associator: p, q must be >= 1");
  return decompose(BaseOp::AntiAssociator,
                   {make_block('a', p), {BlockVar{'b', 0}}, make_block('c', q)}, p, q);
}

PiDecomposition decompose_commutator(int p) {
  if (p < 1) throw DomainError("decompose_commutator: p must be >= 1");
  return decompose(BaseOp::Commutator, {make_block('a', p), {BlockVar{'b', 0}}}, p, 0);
}

}  // namespace loopforge
