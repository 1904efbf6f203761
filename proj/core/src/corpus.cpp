#include "loopforge/corpus.hpp"

#include <array>

namespace loopforge {

CayleyLoop trivial_loop() { return CayleyLoop::from_table({{0}}); }

CayleyLoop cyclic_group(int n) {
  if (n < 1) throw DomainError("cyclic_group: order must be >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return CayleyLoop::from_table(std::move(table));
}

CayleyLoop dihedral_group(int order) {
  if (order < 2 || order % 2 != 0) throw DomainError("dihedral_group: order must be even");
  const int m = order / 2;
  // Element i + m*s = r^i f^s; (r^i f^s)(r^j f^t) = r^(i + j or i - j) f^(s+t).
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  auto id = [m](int rot, int flip) { return ((rot % m) + m) % m + m * (flip & 1); };
  for (int i = 0; i < m; ++i)
    for (int s = 0; s < 2; ++s)
      for (int j = 0; j < m; ++j)
        for (int t = 0; t < 2; ++t)
          table[id(i, s)][id(j, t)] = id(s ? i - j : i + j, s ^ t);
  return CayleyLoop::from_table(std::move(table));
}

CayleyLoop nonassociative_order5() {
  return CayleyLoop::from_table({{0, 1, 2, 3, 4},
                                 {1, 0, 3, 4, 2},
                                 {2, 3, 4, 0, 1},
                                 {3, 4, 1, 2, 0},
                                 {4, 2, 0, 1, 3}});
}

namespace {

// S3 as permutations of {0,1,2}, identity first.
constexpr std::array<std::array<int, 3>, 6> kS3 = {{{0, 1, 2},
                                                    {1, 2, 0},
                                                    {2, 0, 1},
                                                    {1, 0, 2},
                                                    {0, 2, 1},
                                                    {2, 1, 0}}};

int s3_mul(int a, int b) {
  // (a b)(x) = a(b(x))
  std::array<int, 3> composed;
  for (int x = 0; x < 3; ++x) composed[x] = kS3[a][kS3[b][x]];
  for (int i = 0; i < 6; ++i)
    if (kS3[i] == composed) return i;
  return -1;
}

int s3_inv(int a) {
  for (int i = 0; i < 6; ++i)
    if (s3_mul(a, i) == 0) return i;
  return -1;
}

}  // namespace

CayleyLoop moufang_chein_s3() {
  // M(G,2): elements g and g*u; g h as in G, g(hu) = (hg)u,
  // (gu)h = (g h^-1)u, (gu)(hu) = h^-1 g.
  const int n = 12;
  auto enc = [](int g, int side) { return g + 6 * side; };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h) {
      table[enc(g, 0)][enc(h, 0)] = enc(s3_mul(g, h), 0);
      table[enc(g, 0)][enc(h, 1)] = enc(s3_mul(h, g), 1);
      table[enc(g, 1)][enc(h, 0)] = enc(s3_mul(g, s3_inv(h)), 1);
      table[enc(g, 1)][enc(h, 1)] = enc(s3_mul(s3_inv(h), g), 0);
    }
  return CayleyLoop::from_table(std::move(table));
}

namespace {

// Basis octonion products by Cayley-Dickson doubling of the quaternions:
// (a,b)(c,d) = (ac - d b*, a* d + c b) on pairs, with conjugation negating
// the imaginary units. Indices: e_i for i in 0..7, pair (i & 3, i >> 2).
struct SignedUnit {
  int sign;  // +1 or -1
  int index;
};

SignedUnit cd_mul(int dim, int a, int b);

SignedUnit cd_conj(int dim, int a) {
  return {a == 0 ? 1 : -1, a};
}

SignedUnit cd_neg(SignedUnit u) { return {-u.sign, u.index}; }

SignedUnit cd_mul(int dim, int a, int b) {
  if (dim == 1) return {1, 0};
  const int half = dim / 2;
  const int a1 = a % half, a2 = a / half;
  const int b1 = b % half, b2 = b / half;
  // Basis products have at most one nonzero component per pair half.
  auto lift = [&](SignedUnit u, int hi) { return SignedUnit{u.sign, u.index + hi * half}; };
  if (a2 == 0 && b2 == 0) return lift(cd_mul(half, a1, b1), 0);
  if (a2 == 0 && b2 == 1) {
    // (a1,0)(0,b1) = (0, a1* b1)
    SignedUnit conj = cd_conj(half, a1);
    SignedUnit prod = cd_mul(half, conj.index, b1);
    return lift({conj.sign * prod.sign, prod.index}, 1);
  }
  if (a2 == 1 && b2 == 0) {
    // (0,a1)(b1,0) = (0, b1 a1)
    SignedUnit prod = cd_mul(half, b1, a1);
    return lift(prod, 1);
  }
  // (0,a1)(0,b1) = (-b1 a1*, 0)
  SignedUnit conj = cd_conj(half, a1);
  SignedUnit prod = cd_mul(half, b1, conj.index);
  return lift(cd_neg({conj.sign * prod.sign, prod.index}), 0);
}

}  // namespace

CayleyLoop octonion_loop() {
  // Element 2k = +e_k, 2k+1 = -e_k would put -1 at index 1; instead use
  // k for +e_k and 8+k for -e_k so that 0 is the identity.
  const int n = 16;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int sa = a < 8 ? 1 : -1, ia = a % 8;
      const int sb = b < 8 ? 1 : -1, ib = b % 8;
      SignedUnit prod = cd_mul(8, ia, ib);
      const int sign = prod.sign * sa * sb;
      table[a][b] = prod.index + (sign > 0 ? 0 : 8);
    }
  return CayleyLoop::from_table(std::move(table));
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    out.push_back({"trivial", trivial_loop(), true});
    out.push_back({"z2", cyclic_group(2), true});
    out.push_back({"z4", cyclic_group(4), true});
    out.push_back({"d8", dihedral_group(8), true});
    out.push_back({"order5", nonassociative_order5(), false});
    out.push_back({"moufang12", moufang_chein_s3(), false});
    out.push_back({"octonion16", octonion_loop(), false});
    out.push_back({"d32", dihedral_group(32), true});
    return out;
  }();
  return entries;
}

}  // namespace loopforge
