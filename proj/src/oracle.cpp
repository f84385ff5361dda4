#include <algorithm>

#include "twocycles/hamilton.hpp"
#include "twocycles/solver.hpp"

namespace twocycles {

std::optional<CyclePairCert> brute_force_oracle(const Graph& g, int n1, int n2) {
  if (n1 < 3 || n2 < 3 || n1 + n2 > g.order())
    throw InputError("brute_force_oracle: need n1, n2 >= 3 and n1 + n2 <= n");
  const int shorter = std::min(n1, n2);
  const int longer = std::max(n1, n2);
  std::optional<CyclePairCert> found;
  for_each_cycle(g, shorter, g.vertices(), [&](const Cycle& c) {
    const VertexSet rest = g.vertices() - c.vertex_set();
    auto other = longer == rest.size() ? find_hamilton_cycle(g, rest)
                                       : find_cycle_of_length(g, longer, rest);
    if (!other) return false;
    if (shorter == n1)
      found = CyclePairCert{c, std::move(*other)};
    else
      found = CyclePairCert{std::move(*other), c};
    return true;
  });
  return found;
}

}  // namespace twocycles
