#include "loopforge/cayley_loop.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace loopforge {

CayleyLoop CayleyLoop::from_table(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw DomainError("empty table");
  CayleyLoop loop;
  loop.n_ = n;
  loop.table_.assign(n * n, -1);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw DomainError("ragged table: row " + std::to_string(i) + " has " +
                        std::to_string(table[i].size()) + " entries");
    for (int j = 0; j < n; ++j) {
      const int v = table[i][j];
      if (v < 0 || v >= n)
        throw DomainError("entry out of range at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
      loop.table_[i * n + j] = v;
    }
  }
  // Latin square: every row and column a permutation.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (int j = 0; j < n; ++j) {
      if (row[loop.table_[i * n + j]])
        throw DomainError("row " + std::to_string(i) + " repeats entry " +
                          std::to_string(loop.table_[i * n + j]));
      row[loop.table_[i * n + j]] = true;
      if (col[loop.table_[j * n + i]])
        throw DomainError("column " + std::to_string(i) + " repeats entry " +
                          std::to_string(loop.table_[j * n + i]));
      col[loop.table_[j * n + i]] = true;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (loop.table_[i] != i) throw DomainError("element 0 is not a left identity");
    if (loop.table_[i * n] != i) throw DomainError("element 0 is not a right identity");
  }
  // Division tables from the permutation inverses.
  loop.ldiv_.assign(n * n, -1);
  loop.rdiv_.assign(n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int z = 0; z < n; ++z) {
      loop.ldiv_[a * n + loop.table_[a * n + z]] = z;  // a z = b  =>  a \ b = z
      loop.rdiv_[loop.table_[z * n + a] * n + a] = z;  // z a = b  =>  b / a = z
    }
  return loop;
}

CayleyLoop CayleyLoop::load(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n <= 0) throw DomainError("expected a positive loop order");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> table[i][j]))
        throw DomainError("truncated table: missing entry (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
  return from_table(std::move(table));
}

CayleyLoop CayleyLoop::parse(const std::string& text) {
  std::istringstream in(text);
  return load(in);
}

bool CayleyLoop::is_associative() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  return true;
}

bool CayleyLoop::is_commutative() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string CayleyLoop::format() const {
  std::ostringstream out;
  out << n_ << "\n";
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (j) out << ' ';
      out << mul(i, j);
    }
    out << "\n";
  }
  return out.str();
}

Subloop full_subloop(const CayleyLoop& loop) {
  Subloop s(loop.size());
  for (int i = 0; i < loop.size(); ++i) s[i] = i;
  return s;
}

Subloop trivial_subloop() { return {0}; }

bool subloop_contains(const Subloop& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

bool is_subloop(const CayleyLoop& loop, const Subloop& candidate) {
  if (!subloop_contains(candidate, 0)) return false;
  for (int a : candidate)
    for (int b : candidate) {
      if (!subloop_contains(candidate, loop.mul(a, b))) return false;
      if (!subloop_contains(candidate, loop.ldiv(a, b))) return false;
      if (!subloop_contains(candidate, loop.rdiv(a, b))) return false;
    }
  return true;
}

bool is_normal_subloop(const CayleyLoop& loop, const Subloop& candidate) {
  if (!is_subloop(loop, candidate)) return false;
  const int n = loop.size();
  for (int k : candidate)
    for (int x = 0; x < n; ++x) {
      if (!subloop_contains(candidate, loop.inner_t(x, k))) return false;
      for (int y = 0; y < n; ++y) {
        if (!subloop_contains(candidate, loop.inner_l(x, y, k))) return false;
        if (!subloop_contains(candidate, loop.inner_r(x, y, k))) return false;
      }
    }
  return true;
}

Subloop normal_closure(const CayleyLoop& loop, const std::vector<int>& generators) {
  const int n = loop.size();
  std::vector<bool> in_set(n, false);
  in_set[0] = true;
  std::vector<int> members{0};
  for (int g : generators) {
    if (g < 0 || g >= n) throw DomainError("normal_closure: element out of range");
    if (!in_set[g]) {
      in_set[g] = true;
      members.push_back(g);
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    auto insert = [&](int v) {
      if (!in_set[v]) {
        in_set[v] = true;
        members.push_back(v);
        changed = true;
      }
    };
    // members grows while iterating; new entries are picked up in this same
    // pass by the index loops.
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j) {
        insert(loop.mul(members[i], members[j]));
        insert(loop.ldiv(members[i], members[j]));
        insert(loop.rdiv(members[i], members[j]));
      }
    for (std::size_t i = 0; i < members.size(); ++i) {
      const int k = members[i];
      for (int x = 0; x < n; ++x) {
        insert(loop.inner_t(x, k));
        for (int y = 0; y < n; ++y) {
          insert(loop.inner_l(x, y, k));
          insert(loop.inner_r(x, y, k));
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

QuotientLoop quotient(const CayleyLoop& loop, const Subloop& normal) {
  const int n = loop.size();
  if (!is_subloop(loop, normal)) throw DomainError("quotient: not a subloop");

  // Coset of x = { y : x \ y in N }.
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    const int label = static_cast<int>(reps.size());
    reps.push_back(x);  // x is minimal: smaller elements are already labeled
    for (int y = x; y < n; ++y)
      if (coset_of[y] < 0 && subloop_contains(normal, loop.ldiv(x, y))) coset_of[y] = label;
  }
  const int k = static_cast<int>(reps.size());
  std::vector<int> sizes(k, 0);
  for (int x = 0; x < n; ++x) ++sizes[coset_of[x]];
  for (int c = 0; c < k; ++c)
    if (n % k != 0 || sizes[c] != n / k)
      throw DomainError("quotient: cosets do not partition evenly; subloop not normal");

  // Coset product must be independent of representatives.
  std::vector<std::vector<int>> table(k, std::vector<int>(k, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int c = coset_of[loop.mul(x, y)];
      int& cell = table[coset_of[x]][coset_of[y]];
      if (cell < 0)
        cell = c;
      else if (cell != c)
        throw DomainError("quotient: coset product ill-defined; subloop not normal");
    }

  return QuotientLoop{CayleyLoop::from_table(std::move(table)), std::move(coset_of),
                      std::move(reps)};
}

std::string format_subloop(const Subloop& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace loopforge
