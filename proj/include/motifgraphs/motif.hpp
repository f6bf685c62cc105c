#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace motifgraphs {

enum class MotifId { M1, M2, M3, M4, M5 };

// Generating motif on q nodes. Node indices are 1..q (a=1, b=2, c=3, d=4):
//   M1 triangle; M2 triangle with a pendant on c; M3 4-cycle;
//   M4 4-cycle plus the a-c diagonal; M5 complete graph on 4 nodes.
struct MotifSpec {
  MotifId id = MotifId::M1;
  int q = 0;                               // node count
  int r = 0;                               // bond count
  std::vector<std::pair<int, int>> edges;  // unordered pairs i<j over 1..q
  std::vector<int> base_degrees;           // base_degrees[i-1] = degree of node i

  bool regular() const;
};

// Throws std::invalid_argument if the motif description is inconsistent
// (degree sums, edge indices, connectivity).
void validate(const MotifSpec& spec);

const MotifSpec& get_motif(MotifId id);

MotifId motif_from_string(std::string_view name);  // "m1".."m5", case-insensitive
std::string to_string(MotifId id);

}  // namespace motifgraphs
