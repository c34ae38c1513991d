#include "gsc/dehn.hpp"

#include <algorithm>
#include <cassert>

#include "gsc/error.hpp"

namespace gsc {

const char* verdict_label(Verdict v) {
  switch (v) {
    case Verdict::Trivial:
      return "trivial";
    case Verdict::Nontrivial:
      return "nontrivial";
    case Verdict::DehnIrreducible:
      return "irreducible";
  }
  return "irreducible";
}

Solver::Solver(const LabelledGraph& g, Certificate cert)
    : g_(&g), cert_(std::move(cert)) {
  if (!g.folded())
    throw Error::precondition("dehn::Solver: graph is not folded");
  dist_ = all_pairs_distances(g);
}

std::optional<DehnStep> Solver::greendlinger_step(const Word& w) const {
  if (w.empty())
    throw Error::precondition("greendlinger_step: empty word");
  if (!is_cyclically_reduced(w))
    throw Error::precondition("greendlinger_step: word not cyclically reduced");

  const LabelledGraph& g = *g_;
  const int n = static_cast<int>(w.size());
  const int nv = g.vertex_count();

  // For every absolute cyclic index s and start vertex v, the vertices
  // visited while the walk survives reading w[s], w[s+1], ... (capped at n
  // letters). Entry 0 is v itself.
  std::vector<std::vector<VertexId>> visited(
      static_cast<std::size_t>(n) * nv);
  for (int s = 0; s < n; ++s) {
    for (VertexId v = 0; v < nv; ++v) {
      auto& path = visited[static_cast<std::size_t>(s) * nv + v];
      path.push_back(v);
      VertexId cur = v;
      for (int i = 0; i < n; ++i) {
        DartId d = g.out_dart_by_label(cur, w[(s + i) % n]);
        if (d < 0) break;
        cur = g.dart(d).target;
        path.push_back(cur);
      }
    }
  }

  // A check depends only on (absolute index, vertex, length), so spans
  // already scanned under an earlier rotation are known failures and are
  // skipped; the first success in scan order is unchanged.
  std::vector<int> scanned_avail(n, 0);
  for (int r = 0; r < n; ++r) {
    for (int p = 0; p < n; ++p) {
      int s = (r + p) % n;
      int avail = n - p;
      int lo = scanned_avail[s];
      if (avail <= lo) continue;
      for (VertexId v = 0; v < nv; ++v) {
        const auto& path = visited[static_cast<std::size_t>(s) * nv + v];
        int max_len = std::min(static_cast<int>(path.size()) - 1, avail);
        for (int len = max_len; len > lo && len >= 1; --len) {
          VertexId end = path[len];
          if (dist_[end][v] < len) {
            DehnStep st;
            st.rotation = r;
            st.start = p;
            st.length = len;
            st.start_vertex = v;
            st.end_vertex = end;
            st.return_word = shortest_path_word(g, end, v);
            st.replacement = invert(st.return_word);
            return st;
          }
        }
      }
      scanned_avail[s] = avail;
    }
  }
  return std::nullopt;
}

namespace {

Word apply_step(const Word& w, const DehnStep& st) {
  Word rot = rotated(w, st.rotation);
  Word out(rot.begin(), rot.begin() + st.start);
  out.insert(out.end(), st.replacement.begin(), st.replacement.end());
  out.insert(out.end(), rot.begin() + st.start + st.length, rot.end());
  return out;
}

}  // namespace

WpResult Solver::is_trivial(const Word& input) const {
  DehnTrace trace;
  trace.input = input;
  Word cur = cyclic_reduce(input).core;
  while (!cur.empty()) {
    auto st = greendlinger_step(cur);
    if (!st) {
      trace.final_word = cur;
      return {cert_.pass ? Verdict::Nontrivial : Verdict::DehnIrreducible,
              std::move(trace)};
    }
    Word next = cyclic_reduce(apply_step(cur, *st)).core;
    assert(next.size() < cur.size());
    trace.steps.push_back(std::move(*st));
    cur = std::move(next);
  }
  return {Verdict::Trivial, std::move(trace)};
}

WpResult Solver::equal(const Word& u, const Word& v) const {
  return is_trivial(free_reduce(concat(u, invert(v))));
}

bool verify_trace(const LabelledGraph& g, const Word& input,
                  const DehnTrace& trace, std::string* why) {
  auto fail = [why](std::size_t step, const std::string& msg) {
    if (why)
      *why = "step " + std::to_string(step) + ": " + msg;
    return false;
  };
  if (trace.input != input) {
    if (why) *why = "trace input differs from the given word";
    return false;
  }
  auto dist = all_pairs_distances(g);
  Word w = cyclic_reduce(input).core;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const DehnStep& st = trace.steps[i];
    int n = static_cast<int>(w.size());
    if (n == 0) return fail(i, "step applied to the empty word");
    if (st.rotation < 0 || st.rotation >= n)
      return fail(i, "rotation out of range");
    if (st.length < 1 || st.start < 0 || st.start + st.length > n)
      return fail(i, "span out of range");
    Word rot = rotated(w, st.rotation);
    Word u(rot.begin() + st.start, rot.begin() + st.start + st.length);
    auto pu = walk(g, st.start_vertex, u);
    if (!pu) return fail(i, "subword does not immerse from its start vertex");
    VertexId end = u.empty() ? st.start_vertex : g.dart(pu->back()).target;
    if (end != st.end_vertex)
      return fail(i, "subword ends at the wrong vertex");
    auto pq = walk(g, st.end_vertex, st.return_word);
    if (!pq) return fail(i, "return word does not lift from the end vertex");
    VertexId back = st.return_word.empty() ? st.end_vertex
                                           : g.dart(pq->back()).target;
    if (back != st.start_vertex)
      return fail(i, "return word does not come back to the start vertex");
    if (static_cast<int>(st.return_word.size()) !=
        dist[st.end_vertex][st.start_vertex])
      return fail(i, "return word is not a shortest path");
    if (static_cast<int>(st.return_word.size()) >= st.length)
      return fail(i, "return word not strictly shorter than the subword");
    if (st.replacement != invert(st.return_word))
      return fail(i, "replacement is not the inverse of the return word");
    w = cyclic_reduce(apply_step(w, st)).core;
  }
  if (w != trace.final_word) {
    if (why) *why = "replayed final word differs from the recorded one";
    return false;
  }
  return true;
}

}  // namespace gsc
