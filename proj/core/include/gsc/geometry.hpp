#ifndef GSC_GEOMETRY_HPP_
#define GSC_GEOMETRY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsc/dehn.hpp"
#include "gsc/labelled_graph.hpp"
#include "gsc/rational.hpp"
#include "gsc/word.hpp"

namespace gsc {

// Tiles are closed-path words of length at most 3*diameter.
int relator_bound(const LabelledGraph& g);

// Transcript of the recursive filling of a closed-path word: at each level
// the word w splits as prefix.rest with |prefix| = 2*diameter, the connector
// x reads a shortest path from the basepoint to the prefix end, the tile is
// prefix.invert(x) and the recursion continues on x.rest; the last level is
// a single tile. All words are based at `start`.
struct FillingCertificate {
  Word word;
  VertexId start = 0;

  struct Tile {
    Word word;
    VertexId start = 0;
  };
  std::vector<Tile> tiles;

  struct Split {
    Word prefix;
    Word connector;
  };
  std::vector<Split> splits;

  int tile_count = 0;
};

// Requires a folded connected graph with diameter >= 1, and w reduced,
// nonempty, reading a closed path from start. The certificate satisfies
// tile_count * girth <= 3 * |w| and every tile has length <= 3*diameter.
FillingCertificate fill(const LabelledGraph& g, VertexId start, const Word& w);

// Independent re-check of every certificate invariant by walking the graph
// and replaying the splits; reports the first failing check via `why`.
bool verify_filling(const LabelledGraph& g, const FillingCertificate& cert,
                    std::string* why = nullptr);

// (g - 6*Lambda) / 3, exact. Requires a passing certificate.
Rational isoperimetric_constant(const Certificate& cert);

// Ball of the Cayley graph around the identity. Elements are canonical
// representatives: the first-discovered shortest word in length-then-
// name-lexicographic scan order. Representative lengths equal Cayley
// distances from the identity.
struct CayleyBall {
  int radius = 0;
  std::vector<Word> elements;

  struct Edge {
    std::int32_t from;
    Letter label;  // positive generators only
    std::int32_t to;
  };
  std::vector<Edge> edges;
};

inline constexpr int kMaxBallRadius = 64;

// Requires a passing certificate. Deduplication is exact: identical reduced
// words are equal, words whose quotient is shorter than the girth are
// distinct (no relation is shorter than the girth), anything else is
// decided by Dehn reduction.
CayleyBall cayley_ball(const Solver& solver, int radius,
                       std::size_t element_budget = 1'000'000);

struct RelationCheck {
  bool ok = false;
  bool exhaustive = true;
  std::int64_t words_checked = 0;
  Word girth_cycle_word;           // a length-g relator that must be trivial
  std::optional<Word> counterexample;
};

// Shortest-relation check: every nonempty reduced word shorter than the
// girth is nontrivial and some girth cycle word is trivial. Exhaustive when
// the word count fits the budget, otherwise sampled (reported, not an error).
RelationCheck verify_shortest_relation(const Solver& solver,
                                       std::int64_t word_budget = 2'000'000,
                                       int sample_count = 20'000,
                                       std::uint64_t sample_seed = 1);

struct EmbeddingCheck {
  bool ok = false;
  int budget_radius = 0;
  std::int64_t pairs_checked = 0;
  std::string failure;
  bool free_group = false;  // forest special case: no relations at all
};

// Isometric-embedding check: for every vertex pair with d(u, v) <=
// budget_radius there is no group element shorter than d(u, v) equal to the
// path word, checked against a Cayley ball of radius max d - 1. Requires a
// passing certificate; a folded forest presents a free group and embeds
// isometrically with nothing to search.
EmbeddingCheck verify_embedding(const Solver& solver, int budget_radius,
                                std::size_t element_budget = 4'000'000);

}  // namespace gsc

#endif  // GSC_GEOMETRY_HPP_
