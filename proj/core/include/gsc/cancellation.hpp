#ifndef GSC_CANCELLATION_HPP_
#define GSC_CANCELLATION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsc/labelled_graph.hpp"
#include "gsc/rational.hpp"
#include "gsc/word.hpp"

namespace gsc {

// Off-diagonal product graph of a folded graph with itself. Its states are
// ordered pairs (p, q) of distinct vertices; per letter the transition is
// deterministic in each coordinate. Doublets of the graph are exactly the
// words read along non-backtracking walks here: in a folded graph an
// immersion is determined by its start vertex, so two different immersions
// means two different start vertices, and the diagonal is unreachable.
struct ProductGraph {
  int vertex_count = 0;
  int letter_count = 0;

  struct Transition {
    VertexId from_p;
    VertexId from_q;
    Letter label;
    VertexId to_p;
    VertexId to_q;
  };
  std::vector<Transition> transitions;

  // (p*V + q)*k + s -> transition index, or -1.
  std::vector<std::int32_t> transition_at;

  int state_count() const { return vertex_count * (vertex_count - 1); }
  std::int32_t transition_index(VertexId p, VertexId q, Letter s) const {
    return transition_at[(static_cast<std::size_t>(p) * vertex_count + q) *
                             letter_count +
                         s];
  }
};

ProductGraph product_graph(const LabelledGraph& g);

struct DoubletWitness {
  Word word;
  VertexId start_a;
  VertexId start_b;
};

// Witness that \Lambda is unbounded: a directed cycle of non-backtracking
// transitions in the product graph.
struct ProductCycleWitness {
  std::vector<std::pair<VertexId, VertexId>> states;
  Word letters;
};

struct LongestDoublet {
  bool unbounded = false;
  int lambda = 0;  // meaningful when !unbounded
  std::optional<DoubletWitness> witness;
  std::optional<ProductCycleWitness> cycle;
};

// Longest-path / cycle detection on the dart-level lift of the product
// graph (nodes are transitions, so backtracking is excluded exactly).
LongestDoublet longest_doublet(const LabelledGraph& g);

// Independent oracle: enumerates reduced words with at least two immersions
// by a joint walk from all vertices, pruning when fewer than two distinct
// start vertices survive. Sorted shortlex. Throws Budget past `node_cap`
// explored words and Precondition when max_len exceeds the cap.
std::vector<Word> brute_force_doublets(const LabelledGraph& g, int max_len,
                                       std::int64_t node_cap = 20'000'000);

inline constexpr int kMaxBruteForceLen = 64;

struct Certificate {
  bool folded = false;
  std::vector<FoldedViolation> folded_violations;
  std::optional<int> girth;
  int diameter = 0;

  enum class Lambda { Finite, Unbounded, NotComputed };
  Lambda lambda_kind = Lambda::NotComputed;
  int lambda = 0;

  std::optional<DoubletWitness> witness;
  std::optional<ProductCycleWitness> cycle_witness;

  bool pass = false;
  std::vector<std::string> failure_reasons;

  // "lambda/girth", unreduced, e.g. "0/2"; empty when either is undefined.
  std::string ratio;
};

// Runs the folded check, girth, diameter and the doublet search, and decides
// the small cancellation condition by exact integer comparison 6*Lambda < g.
// Failures are verdicts, not errors.
Certificate certify(const LabelledGraph& g);

// Conclusions granted by a passing certificate (never machine-verified
// beyond the desk-scale checks in the geometry module).
std::vector<std::string> granted_properties(const Certificate& c);

}  // namespace gsc

#endif  // GSC_CANCELLATION_HPP_
