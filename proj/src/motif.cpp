#include "motifgraphs/motif.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace motifgraphs {

bool MotifSpec::regular() const {
  return std::all_of(base_degrees.begin(), base_degrees.end(),
                     [&](int d) { return d == base_degrees.front(); });
}

void validate(const MotifSpec& spec) {
  if (spec.q < 2 || spec.q > 4) throw std::invalid_argument("motif node count out of range");
  if (static_cast<int>(spec.edges.size()) != spec.r)
    throw std::invalid_argument("motif bond count mismatch");
  if (static_cast<int>(spec.base_degrees.size()) != spec.q)
    throw std::invalid_argument("motif degree list mismatch");

  std::vector<int> deg(spec.q, 0);
  for (auto [i, j] : spec.edges) {
    if (i < 1 || j < 1 || i > spec.q || j > spec.q || i >= j)
      throw std::invalid_argument("motif edge indices malformed");
    ++deg[i - 1];
    ++deg[j - 1];
  }
  for (int i = 0; i < spec.q; ++i)
    if (deg[i] != spec.base_degrees[i]) throw std::invalid_argument("motif degrees inconsistent");

  // connectivity over the q nodes
  std::vector<char> seen(spec.q, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (auto [i, j] : spec.edges) {
      int v = -1;
      if (i - 1 == u) v = j - 1;
      if (j - 1 == u) v = i - 1;
      if (v >= 0 && !seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != spec.q)
    throw std::invalid_argument("motif not connected");
}

namespace {

std::vector<MotifSpec> make_catalog() {
  std::vector<MotifSpec> cat;
  cat.push_back({MotifId::M1, 3, 3, {{1, 2}, {1, 3}, {2, 3}}, {2, 2, 2}});
  cat.push_back({MotifId::M2, 4, 4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}, {2, 2, 3, 1}});
  cat.push_back({MotifId::M3, 4, 4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}}, {2, 2, 2, 2}});
  cat.push_back({MotifId::M4, 4, 5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}}, {3, 2, 3, 2}});
  cat.push_back({MotifId::M5, 4, 6, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, {3, 3, 3, 3}});
  for (const auto& spec : cat) validate(spec);
  return cat;
}

}  // namespace

const MotifSpec& get_motif(MotifId id) {
  static const std::vector<MotifSpec> catalog = make_catalog();
  return catalog[static_cast<int>(id)];
}

MotifId motif_from_string(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  static const std::array<std::pair<const char*, MotifId>, 5> table{{{"m1", MotifId::M1},
                                                                     {"m2", MotifId::M2},
                                                                     {"m3", MotifId::M3},
                                                                     {"m4", MotifId::M4},
                                                                     {"m5", MotifId::M5}}};
  for (const auto& [key, id] : table)
    if (s == key) return id;
  throw std::invalid_argument("unknown motif name: " + std::string(name));
}

std::string to_string(MotifId id) {
  switch (id) {
    case MotifId::M1: return "m1";
    case MotifId::M2: return "m2";
    case MotifId::M3: return "m3";
    case MotifId::M4: return "m4";
    case MotifId::M5: return "m5";
  }
  throw std::invalid_argument("bad motif id");
}

}  // namespace motifgraphs
