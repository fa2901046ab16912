// Builds the Whitehead graph of a small collection, prints it as DOT, and
// reports the basic facts the certifier relies on.

#include <iostream>

#include "wgeo/wgeo.hpp"

int main() {
  wgeo::Alphabet f3(3);
  auto words = wgeo::parse_collection("bbaaccabc", f3);
  wgeo::MultiGraph g = wgeo::build_whitehead_graph(words, f3);

  std::cout << wgeo::to_dot(g);
  std::cout << "vertices: " << g.vertex_count() << ", edges: " << g.edge_count() << "\n";
  if (auto k = wgeo::is_regular(g)) std::cout << "regular of valence " << *k << "\n";
  std::cout << "edge connectivity: " << wgeo::edge_connectivity(g).value << "\n";
  std::cout << "planar: " << (wgeo::is_planar(g).planar ? "yes" : "no") << "\n";
  return 0;
}
