#include "gsc/cancellation.hpp"

#include <algorithm>
#include <deque>

#include "gsc/error.hpp"

namespace gsc {

ProductGraph product_graph(const LabelledGraph& g) {
  if (!g.folded())
    throw Error::precondition("product_graph: graph is not folded");
  ProductGraph p;
  p.vertex_count = g.vertex_count();
  p.letter_count = g.alphabet().letter_count();
  std::size_t cells = static_cast<std::size_t>(p.vertex_count) *
                      p.vertex_count * p.letter_count;
  p.transition_at.assign(cells, -1);
  for (VertexId a = 0; a < p.vertex_count; ++a) {
    for (VertexId b = 0; b < p.vertex_count; ++b) {
      if (a == b) continue;
      for (Letter s = 0; s < p.letter_count; ++s) {
        DartId da = g.out_dart_by_label(a, s);
        DartId db = g.out_dart_by_label(b, s);
        if (da < 0 || db < 0) continue;
        VertexId ta = g.dart(da).target;
        VertexId tb = g.dart(db).target;
        // Folded-ness makes (x, x) unreachable from off-diagonal states.
        if (ta == tb)
          throw Error::precondition(
              "product_graph: diagonal transition; graph not folded");
        std::size_t cell =
            (static_cast<std::size_t>(a) * p.vertex_count + b) *
                p.letter_count +
            s;
        p.transition_at[cell] =
            static_cast<std::int32_t>(p.transitions.size());
        p.transitions.push_back({a, b, s, ta, tb});
      }
    }
  }
  return p;
}

LongestDoublet longest_doublet(const LabelledGraph& g) {
  ProductGraph p = product_graph(g);
  LongestDoublet result;
  int nt = static_cast<int>(p.transitions.size());
  if (nt == 0) return result;  // lambda = 0

  // Dart-level lift: nodes are transitions; an edge t -> t' exists when t'
  // continues t and is not its inverse (which, per letter, is the unique
  // backtracking continuation in a folded graph).
  auto successors = [&p](int t, auto&& fn) {
    const auto& tr = p.transitions[t];
    Letter back = inverse(tr.label);
    for (Letter s = 0; s < p.letter_count; ++s) {
      if (s == back) continue;
      std::int32_t j = p.transition_index(tr.to_p, tr.to_q, s);
      if (j >= 0) fn(j);
    }
  };

  // Iterative three-colour DFS: detects a transition cycle (unbounded
  // lambda) or computes the longest-path DP at blackening time.
  std::vector<std::vector<int>> succ(nt);
  for (int t = 0; t < nt; ++t)
    successors(t, [&succ, t](int j) { succ[t].push_back(j); });

  std::vector<char> color(nt, 0);  // 0 white, 1 gray, 2 black
  std::vector<int> best_len(nt, 1);
  std::vector<int> best_next(nt, -1);
  std::vector<std::pair<int, std::size_t>> stack;
  std::vector<int> path;

  for (int root = 0; root < nt; ++root) {
    if (color[root] != 0) continue;
    stack.clear();
    path.clear();
    stack.emplace_back(root, 0);
    color[root] = 1;
    path.push_back(root);
    while (!stack.empty()) {
      auto& [t, idx] = stack.back();
      if (idx < succ[t].size()) {
        int j = succ[t][idx++];
        if (color[j] == 1) {
          // Cycle: the tail of the current DFS path from j.
          result.unbounded = true;
          ProductCycleWitness cw;
          auto it = std::find(path.begin(), path.end(), j);
          for (; it != path.end(); ++it) {
            const auto& tr = p.transitions[*it];
            cw.states.emplace_back(tr.from_p, tr.from_q);
            cw.letters.push_back(tr.label);
          }
          result.cycle = std::move(cw);
          return result;
        }
        if (color[j] == 0) {
          color[j] = 1;
          stack.emplace_back(j, 0);
          path.push_back(j);
        }
      } else {
        color[t] = 2;
        for (int j : succ[t]) {
          if (1 + best_len[j] > best_len[t]) {
            best_len[t] = 1 + best_len[j];
            best_next[t] = j;
          }
        }
        path.pop_back();
        stack.pop_back();
      }
    }
  }

  int start = 0;
  for (int t = 1; t < nt; ++t)
    if (best_len[t] > best_len[start]) start = t;

  result.lambda = best_len[start];
  DoubletWitness w;
  w.start_a = p.transitions[start].from_p;
  w.start_b = p.transitions[start].from_q;
  for (int t = start; t != -1; t = best_next[t])
    w.word.push_back(p.transitions[t].label);
  result.witness = std::move(w);
  return result;
}

std::vector<Word> brute_force_doublets(const LabelledGraph& g, int max_len,
                                       std::int64_t node_cap) {
  if (!g.folded())
    throw Error::precondition("brute_force_doublets: graph is not folded");
  if (max_len > kMaxBruteForceLen)
    throw Error::precondition("brute_force_doublets: max_len exceeds cap " +
                              std::to_string(kMaxBruteForceLen));

  std::vector<Word> found;
  if (max_len <= 0) return found;

  int k = g.alphabet().letter_count();
  std::int64_t visited = 0;

  // Joint walk: survivors are (start, current) pairs; a word is a doublet
  // iff at least two distinct starts survive. Extending never grows the
  // survivor set, so pruning below two starts is exact.
  struct Frame {
    std::vector<std::pair<VertexId, VertexId>> live;
  };
  Word word;

  auto distinct_starts = [](const std::vector<std::pair<VertexId, VertexId>>& v) {
    int count = 0;
    VertexId last = -1;
    for (auto& [s, c] : v) {
      if (s != last) {
        ++count;
        last = s;
      }
    }
    return count;
  };

  std::vector<std::pair<VertexId, VertexId>> init;
  for (VertexId v = 0; v < g.vertex_count(); ++v) init.emplace_back(v, v);

  auto rec = [&](auto&& self, const std::vector<std::pair<VertexId, VertexId>>&
                                  live) -> void {
    if (static_cast<int>(word.size()) >= max_len) return;
    Letter last = word.empty() ? -1 : word.back();
    for (Letter s = 0; s < k; ++s) {
      if (last >= 0 && s == inverse(last)) continue;
      std::vector<std::pair<VertexId, VertexId>> next;
      for (auto& [start, cur] : live) {
        DartId d = g.out_dart_by_label(cur, s);
        if (d >= 0) next.emplace_back(start, g.dart(d).target);
      }
      if (distinct_starts(next) < 2) continue;
      if (++visited > node_cap)
        throw Error::budget("brute_force_doublets: node budget exhausted");
      word.push_back(s);
      found.push_back(word);
      self(self, next);
      word.pop_back();
    }
  };
  rec(rec, init);

  std::sort(found.begin(), found.end(),
            [&g](const Word& a, const Word& b) {
              return shortlex_less(a, b, g.alphabet());
            });
  return found;
}

Certificate certify(const LabelledGraph& g) {
  Certificate c;
  const FoldedReport& fr = g.folded_report();
  c.folded = fr.folded;
  c.folded_violations = fr.violations;
  c.girth = girth(g);
  c.diameter = diameter(g);

  if (!c.folded) {
    c.failure_reasons.push_back("labelling is not reduced (graph not folded)");
  } else {
    LongestDoublet ld = longest_doublet(g);
    if (ld.unbounded) {
      c.lambda_kind = Certificate::Lambda::Unbounded;
      c.cycle_witness = ld.cycle;
      c.failure_reasons.push_back(
          "longest doublet is unbounded (product graph has a cycle)");
    } else {
      c.lambda_kind = Certificate::Lambda::Finite;
      c.lambda = ld.lambda;
      c.witness = ld.witness;
    }
  }

  if (!c.girth) {
    c.failure_reasons.push_back("graph is a forest (girth undefined)");
  }

  if (c.folded && c.girth && c.lambda_kind == Certificate::Lambda::Finite) {
    c.ratio = std::to_string(c.lambda) + "/" + std::to_string(*c.girth);
    if (6 * static_cast<std::int64_t>(c.lambda) < *c.girth) {
      c.pass = true;
    } else {
      c.failure_reasons.push_back("6*lambda >= girth");
    }
  }
  return c;
}

std::vector<std::string> granted_properties(const Certificate& c) {
  if (!c.pass) return {};
  return {"hyperbolic", "torsion-free", "standard presentation aspherical",
          "cohomological dimension at most 2"};
}

}  // namespace gsc
