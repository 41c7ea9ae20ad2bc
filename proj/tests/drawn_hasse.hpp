#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parorb/nilp3.hpp"

// Hasse diagram drawn for blocks (2,2), degree 3: 14 boxes and 20 edges,
// each edge written (generic, degenerate).
namespace parorb::drawn_hasse {

inline std::map<std::string, Decomposition3> nodes() {
  return {
      {"M1", Decomposition3::of({{"U^{(1)}_{2,4}", 1}})},
      {"M2", Decomposition3::of({{"U^{(2)}_{2,4}", 1}})},
      {"M3", Decomposition3::of({{"U^{(1)}_{2,3}", 1}, {"U_{0,1}", 1}})},
      {"M4", Decomposition3::of({{"U^{(2)}_{2,3}", 1}, {"U_{0,1}", 1}})},
      {"M5", Decomposition3::of({{"U^{(3)}_{2,3}", 1}, {"U_{0,1}", 1}})},
      {"M6", Decomposition3::of({{"U_{2,2}", 1}, {"U_{0,2}", 1}})},
      {"M7", Decomposition3::of({{"U_{2,2}", 1}, {"U_{0,1}", 2}})},
      {"M8", Decomposition3::of({{"U^{(1)}_{1,3}", 1}, {"U_{1,1}", 1}})},
      {"M9", Decomposition3::of({{"U^{(2)}_{1,3}", 1}, {"U_{1,1}", 1}})},
      {"M10", Decomposition3::of({{"U^{(3)}_{1,3}", 1}, {"U_{1,1}", 1}})},
      {"M11", Decomposition3::of({{"U^{(1)}_{1,2}", 1}, {"U^{(2)}_{1,2}", 1}})},
      {"M12", Decomposition3::of({{"U^{(1)}_{1,2}", 1}, {"U_{1,1}", 1}, {"U_{0,1}", 1}})},
      {"M13", Decomposition3::of({{"U^{(2)}_{1,2}", 1}, {"U_{1,1}", 1}, {"U_{0,1}", 1}})},
      {"M14", Decomposition3::of({{"U_{1,1}", 2}, {"U_{0,1}", 2}})},
  };
}

inline std::vector<std::pair<std::string, std::string>> edges() {
  return {{"M1", "M3"},   {"M1", "M8"},   {"M3", "M9"},   {"M3", "M4"},   {"M8", "M9"},
          {"M8", "M4"},   {"M9", "M2"},   {"M9", "M10"},  {"M9", "M11"},  {"M4", "M6"},
          {"M4", "M12"},  {"M4", "M11"},  {"M2", "M5"},   {"M11", "M12"}, {"M6", "M7"},
          {"M5", "M13"},  {"M10", "M13"}, {"M12", "M13"}, {"M7", "M13"},  {"M13", "M14"}};
}

/// Classes of dimension vector (2,4) that have no box in the drawing.
inline std::vector<Decomposition3> unpictured() {
  return {
      Decomposition3::of({{"U^{(1)}_{1,2}", 2}}),
      Decomposition3::of({{"U^{(2)}_{1,2}", 2}}),
      Decomposition3::of({{"U_{1,1}", 2}, {"U_{0,2}", 1}}),
  };
}

}  // namespace parorb::drawn_hasse
