#ifndef GSC_LABELLED_GRAPH_HPP_
#define GSC_LABELLED_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsc/word.hpp"

namespace gsc {

using VertexId = std::int32_t;
using DartId = std::int32_t;

// An oriented edge. Darts come in twin pairs 2k / 2k+1: twin darts swap
// source and target and carry inverse letters.
struct Dart {
  VertexId source;
  VertexId target;
  Letter label;
};

inline DartId twin(DartId d) { return d ^ 1; }

struct FoldedViolation {
  VertexId vertex;
  Letter label;
  DartId first;
  DartId second;
};

struct FoldedReport {
  bool folded = true;
  std::vector<FoldedViolation> violations;
};

// A finite connected labelled multigraph. Vertices are sorted by name at
// construction, so VertexId order is name order; darts keep the input edge
// order. Immutable once built.
class LabelledGraph {
 public:
  // Line-oriented text format; see the README. Rejects disconnected input.
  static LabelledGraph parse(std::string_view text);

  // One entry per unoriented edge, in order: (source name, target name,
  // label of the representative dart).
  static LabelledGraph from_edges(
      Alphabet alphabet,
      const std::vector<std::tuple<std::string, std::string, Letter>>& edges);

  const Alphabet& alphabet() const { return alphabet_; }
  int vertex_count() const { return static_cast<int>(names_.size()); }
  int dart_count() const { return static_cast<int>(darts_.size()); }
  int edge_count() const { return dart_count() / 2; }

  const std::string& vertex_name(VertexId v) const { return names_[v]; }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  const Dart& dart(DartId d) const { return darts_[d]; }

  // Out-darts of v sorted by (target name, label name, dart id).
  std::span<const DartId> out_darts(VertexId v) const {
    return {out_[v].data(), out_[v].size()};
  }

  // The unique out-dart of v labelled s, or -1. Meaningful on folded graphs;
  // on unfolded ones it returns the first in sorted order.
  DartId out_dart_by_label(VertexId v, Letter s) const {
    return by_label_[static_cast<std::size_t>(v) * alphabet_.letter_count() + s];
  }

  bool folded() const { return folded_report_.folded; }
  const FoldedReport& folded_report() const { return folded_report_; }

  // Vertices of degree < 2 ("filaments" end there); a warning, not an error.
  std::vector<VertexId> filament_vertices() const;

  // Round-trips through parse().
  std::string to_file_text() const;

 private:
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::vector<Dart> darts_;
  std::vector<std::vector<DartId>> out_;
  std::vector<DartId> by_label_;
  FoldedReport folded_report_;
};

FoldedReport check_folded(const LabelledGraph& g);

// Girth of the underlying multigraph: a loop is a 1-cycle, a parallel pair a
// 2-cycle. nullopt iff the graph is a forest.
std::optional<int> girth(const LabelledGraph& g);

struct GirthWitness {
  int length;
  std::vector<DartId> cycle;  // closed dart path realizing the girth
};
std::optional<GirthWitness> girth_witness(const LabelledGraph& g);

int diameter(const LabelledGraph& g);
std::vector<std::vector<int>> all_pairs_distances(const LabelledGraph& g);

// The unique path reading w from start, or nullopt if the walk dies.
// Requires a folded graph; for a reduced w the path is an immersion.
std::optional<std::vector<DartId>> walk(const LabelledGraph& g, VertexId start,
                                        const Word& w);

// Word read on a BFS-shortest path u -> v, deterministic via dart order.
Word shortest_path_word(const LabelledGraph& g, VertexId u, VertexId v);

// A maximal subtree plus one cycle per non-tree edge: a standard family of
// cycles based at `base`.
struct CycleFamily {
  VertexId base = 0;
  std::vector<char> tree_edge;      // per unoriented edge index
  std::vector<Word> tree_words;     // word read base -> v along the tree
  std::vector<int> cycle_edges;     // non-tree edge index per cycle
  std::vector<std::vector<DartId>> cycles;  // closed dart paths from base
  std::vector<Word> cycle_words;    // unreduced words read on the cycles
};

CycleFamily spanning_tree(const LabelledGraph& g);
CycleFamily spanning_tree(const LabelledGraph& g, VertexId root);

// E - V + 1, the rank of the fundamental group.
int rank(const LabelledGraph& g);

}  // namespace gsc

#endif  // GSC_LABELLED_GRAPH_HPP_
