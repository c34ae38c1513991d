#ifndef GSC_SHAPES_HPP_
#define GSC_SHAPES_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gsc/labelled_graph.hpp"

namespace gsc {

// An unlabelled multigraph: the input shape for random labellings.
struct Multigraph {
  std::vector<std::string> vertex_names;
  std::vector<std::pair<int, int>> edges;  // indices into vertex_names
};

namespace shapes {

// Two hubs joined by `arms` disjoint paths of `arm_len` edges each.
Multigraph theta(int arms, int arm_len);

// Simple cycle on n vertices (n == 1 is a loop, n == 2 a parallel pair).
Multigraph cycle(int n);

// One vertex with `petals` loops.
Multigraph bouquet(int petals);

// Path with n edges.
Multigraph path(int n);

}  // namespace shapes

// Deterministic unbiased integer draws (splitmix64 + rejection sampling).
// std::uniform_int_distribution is implementation-defined, which would break
// byte-identical reports across platforms.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint32_t below(std::uint32_t n);  // uniform in [0, n)

 private:
  std::uint64_t state_;
};

// Greedy seeded labelling: edges in fixed order, choosing uniformly among
// letters that keep both endpoints folded, restarting on dead ends. Throws
// Precondition if some vertex has degree > 2m (no folded labelling exists)
// and Budget when the restart allowance runs out.
LabelledGraph random_labelling(const Multigraph& shape,
                               const Alphabet& alphabet, std::uint64_t seed,
                               int max_restarts = 200);

}  // namespace gsc

#endif  // GSC_SHAPES_HPP_
