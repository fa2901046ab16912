// Simulates a 3-sheeted cover of a Whitehead graph by splicing copies, then
// checks that valence, edge connectivity and the minor relation survive.

#include <iostream>

#include "wgeo/wgeo.hpp"

int main() {
  wgeo::Alphabet f3(3);
  auto words = wgeo::parse_collection("bbaaccabc", f3);
  wgeo::MultiGraph base = wgeo::build_whitehead_graph(words, f3);

  wgeo::CoverTrace cover = wgeo::simulate_cover(base, 3, /*seed=*/42);
  std::cout << "spliced " << cover.steps.size() << " times:";
  for (const auto& step : cover.steps) std::cout << " (" << step.first << "," << step.second << ")";
  std::cout << "\n";
  std::cout << "vertices: " << cover.graph.vertex_count()
            << ", edges: " << cover.graph.edge_count() << "\n";
  std::cout << "edge connectivity: " << wgeo::edge_connectivity(cover.graph).value << "\n";
  std::cout << "planar: " << (wgeo::is_planar(cover.graph).planar ? "yes" : "no") << "\n";
  std::cout << "base graph is a minor: "
            << (wgeo::contains_minor(cover.graph, base) ? "yes" : "no") << "\n";
  return 0;
}
