// Embed a 24-cycle into the 5-pancake graph and print its image and measured cost.

#include <iostream>

#include "pancake/pancake.hpp"

int main() {
  using namespace pancake;
  const Embedding e = embed_ring(4, 5);
  for (std::size_t v = 0; v < e.map.size(); ++v) {
    std::cout << v << " -> " << e.map[v] << '\n';
  }
  const EmbedReport r = measure(e, bfs_from_identity(e.host));
  std::cout << "dilation " << r.dilation << ", congestion " << r.congestion.value_or(0) << ", expansion "
            << r.expansion.numerator << "/" << r.expansion.denominator << '\n';
  return r.dilation == 1 ? 0 : 1;
}
