#pragma once

#include "loopforge/cayley_loop.hpp"

#include <string>
#include <vector>

namespace loopforge {

struct CorpusEntry {
  std::string name;
  CayleyLoop loop;
  bool group;  // associative
};

CayleyLoop trivial_loop();
CayleyLoop cyclic_group(int n);
CayleyLoop dihedral_group(int order);  // order = 2m, m >= 1
// The classical smallest nonassociative loop.
CayleyLoop nonassociative_order5();
// Chein double M(G, 2) of the symmetric group S3: a nonassociative Moufang
// loop of order 12.
CayleyLoop moufang_chein_s3();
// The loop of unit basis octonions {+-e_0..+-e_7}: nonassociative Moufang,
// centrally nilpotent.
CayleyLoop octonion_loop();

// Every bundled loop, validated on construction.
const std::vector<CorpusEntry>& corpus();

}  // namespace loopforge
