#include "gsc/geometry.hpp"

#include <algorithm>
#include <unordered_map>

#include "gsc/error.hpp"
#include "gsc/shapes.hpp"

namespace gsc {

int relator_bound(const LabelledGraph& g) { return 3 * diameter(g); }

FillingCertificate fill(const LabelledGraph& g, VertexId start,
                        const Word& w) {
  if (!g.folded()) throw Error::precondition("fill: graph is not folded");
  if (w.empty()) throw Error::precondition("fill: empty word");
  if (!is_reduced(w)) throw Error::precondition("fill: word is not reduced");
  int delta = diameter(g);
  if (delta < 1)
    throw Error::precondition(
        "fill: diameter 0 (single-vertex graph); the tile bound 3*diameter "
        "degenerates and no filling exists");
  auto path = walk(g, start, w);
  if (!path) throw Error::precondition("fill: word does not lift from start");
  if (g.dart(path->back()).target != start)
    throw Error::precondition("fill: path is not closed");

  FillingCertificate cert;
  cert.word = w;
  cert.start = start;

  Word cur = w;
  while (static_cast<int>(cur.size()) > 2 * delta) {
    Word prefix(cur.begin(), cur.begin() + 2 * delta);
    auto p = walk(g, start, prefix);
    VertexId end = g.dart(p->back()).target;
    Word connector = shortest_path_word(g, start, end);
    cert.tiles.push_back({concat(prefix, invert(connector)), start});
    cert.splits.push_back({prefix, connector});
    Word rest(cur.begin() + 2 * delta, cur.end());
    cur = concat(connector, rest);
  }
  cert.tiles.push_back({cur, start});
  cert.tile_count = static_cast<int>(cert.tiles.size());
  return cert;
}

bool verify_filling(const LabelledGraph& g, const FillingCertificate& cert,
                    std::string* why) {
  auto fail = [why](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!g.folded()) return fail("graph is not folded");
  auto gv = girth(g);
  if (!gv) return fail("graph is a forest; no closed reduced word exists");
  int delta = diameter(g);

  if (cert.tile_count != static_cast<int>(cert.tiles.size()))
    return fail("tile_count does not match the number of tiles");
  if (cert.tiles.empty()) return fail("no tiles");
  if (cert.tiles.size() != cert.splits.size() + 1)
    return fail("tile and split counts inconsistent");
  if (cert.word.empty() || !is_reduced(cert.word))
    return fail("input word empty or not reduced");

  auto closed_from = [&g](VertexId v, const Word& w) {
    if (w.empty()) return true;
    auto p = walk(g, v, w);
    return p.has_value() && g.dart(p->back()).target == v;
  };

  if (!closed_from(cert.start, cert.word))
    return fail("input word does not read a closed path from its start");

  for (std::size_t i = 0; i < cert.tiles.size(); ++i) {
    const auto& tile = cert.tiles[i];
    if (tile.word.empty()) return fail("tile " + std::to_string(i) + " empty");
    if (static_cast<int>(tile.word.size()) > 3 * delta)
      return fail("tile " + std::to_string(i) + " longer than 3*diameter");
    if (!closed_from(tile.start, tile.word))
      return fail("tile " + std::to_string(i) + " is not a closed path");
  }

  // Replay the recursion backwards: w_last is the final tile; at level k the
  // tile must equal prefix.invert(connector) and w_k = prefix.rest where
  // w_{k+1} = connector.rest.
  Word cur = cert.tiles.back().word;
  for (std::size_t k = cert.splits.size(); k-- > 0;) {
    const auto& sp = cert.splits[k];
    if (static_cast<int>(sp.prefix.size()) != 2 * delta)
      return fail("split " + std::to_string(k) +
                  " prefix length is not 2*diameter");
    if (static_cast<int>(sp.connector.size()) > delta)
      return fail("split " + std::to_string(k) +
                  " connector longer than the diameter");
    if (cert.tiles[k].word != concat(sp.prefix, invert(sp.connector)))
      return fail("tile " + std::to_string(k) +
                  " does not match prefix.invert(connector)");
    if (cur.size() < sp.connector.size() ||
        !std::equal(sp.connector.begin(), sp.connector.end(), cur.begin()))
      return fail("split " + std::to_string(k) +
                  " connector is not a prefix of the remainder");
    Word rest(cur.begin() + sp.connector.size(), cur.end());
    cur = concat(sp.prefix, rest);
  }
  if (cur != cert.word)
    return fail("replaying the splits does not reconstruct the input word");

  if (static_cast<std::int64_t>(cert.tile_count) * *gv >
      3 * static_cast<std::int64_t>(cert.word.size()))
    return fail("tile count violates N*girth <= 3*|w|");
  return true;
}

Rational isoperimetric_constant(const Certificate& cert) {
  if (!cert.pass)
    throw Error::precondition(
        "isoperimetric_constant: certificate did not pass");
  return Rational(*cert.girth - 6 * static_cast<std::int64_t>(cert.lambda), 3);
}

namespace {

std::string pack(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter x : w) s.push_back(static_cast<char>(x));
  return s;
}

// Shared element store for ball construction and membership queries.
struct BallIndex {
  const Solver* solver;
  int girth_len;
  std::vector<Word> reps;
  std::vector<std::vector<std::int32_t>> by_length;
  std::unordered_map<std::string, std::int32_t> exact;

  explicit BallIndex(const Solver& s) : solver(&s) {
    girth_len = *s.certificate().girth;
  }

  std::int32_t add(const Word& w) {
    std::int32_t id = static_cast<std::int32_t>(reps.size());
    reps.push_back(w);
    if (by_length.size() <= w.size()) by_length.resize(w.size() + 1);
    by_length[w.size()].push_back(id);
    exact.emplace(pack(w), id);
    return id;
  }

  // Index of the element equal to the reduced word w, or -1. Two reduced
  // words u, v are equal iff reduce(u.invert(v)) is trivial; when its length
  // is below the girth that needs u == v exactly, so the Dehn
  // solver is only consulted for representatives long enough to matter.
  std::int32_t find(const Word& w, int max_rep_len = -1) const {
    if (max_rep_len < 0 ||
        max_rep_len >= static_cast<int>(w.size())) {
      auto it = exact.find(pack(w));
      if (it != exact.end()) return it->second;
    }
    int limit = max_rep_len < 0 ? static_cast<int>(by_length.size()) - 1
                                : std::min<int>(max_rep_len,
                                                static_cast<int>(
                                                    by_length.size()) -
                                                    1);
    int lo = girth_len - static_cast<int>(w.size());
    for (int len = std::max(lo, 0); len <= limit; ++len) {
      for (std::int32_t id : by_length[len]) {
        if (reps[id] == w) continue;  // exact hash already covered it
        if (static_cast<int>(w.size() + reps[id].size()) < girth_len)
          continue;
        if (solver->is_trivial(free_reduce(concat(w, invert(reps[id]))))
                .verdict == Verdict::Trivial)
          return id;
      }
    }
    return -1;
  }
};

BallIndex build_ball_index(const Solver& solver, int radius,
                           std::size_t element_budget) {
  const Certificate& cert = solver.certificate();
  if (!cert.pass)
    throw Error::precondition("cayley_ball: certificate did not pass");
  if (radius < 0 || radius > kMaxBallRadius)
    throw Error::precondition("cayley_ball: radius outside [0, " +
                              std::to_string(kMaxBallRadius) + "]");
  const LabelledGraph& g = solver.graph();
  const Alphabet& a = g.alphabet();

  BallIndex index(solver);
  index.add({});
  std::size_t level_begin = 0;
  for (int len = 0; len < radius; ++len) {
    std::size_t level_end = index.reps.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      if (static_cast<int>(index.reps[i].size()) != len) continue;
      for (Letter s : a.letters_by_name()) {
        Word cand = free_reduce(concat(index.reps[i], {s}));
        if (index.find(cand) >= 0) continue;
        if (index.reps.size() >= element_budget)
          throw Error::budget("cayley_ball: element budget exhausted");
        index.add(cand);
      }
    }
    level_begin = level_end;
  }
  return index;
}

}  // namespace

CayleyBall cayley_ball(const Solver& solver, int radius,
                       std::size_t element_budget) {
  BallIndex index = build_ball_index(solver, radius, element_budget);
  CayleyBall ball;
  ball.radius = radius;
  ball.elements = index.reps;

  const Alphabet& a = solver.graph().alphabet();
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(index.reps.size());
       ++i) {
    for (int gi = 0; gi < a.size(); ++gi) {
      Letter s = static_cast<Letter>(2 * gi);
      Word cand = free_reduce(concat(index.reps[i], {s}));
      std::int32_t j = index.find(cand);
      if (j >= 0) ball.edges.push_back({i, s, j});
    }
  }
  return ball;
}

RelationCheck verify_shortest_relation(const Solver& solver,
                                       std::int64_t word_budget,
                                       int sample_count,
                                       std::uint64_t sample_seed) {
  const Certificate& cert = solver.certificate();
  if (!cert.pass)
    throw Error::precondition(
        "verify_shortest_relation: certificate did not pass");
  const LabelledGraph& g = solver.graph();
  int gv = *cert.girth;
  int k = g.alphabet().letter_count();

  RelationCheck out;

  auto witness = girth_witness(g);
  Word cycle_word;
  for (DartId d : witness->cycle) cycle_word.push_back(g.dart(d).label);
  out.girth_cycle_word = cycle_word;
  if (solver.is_trivial(cycle_word).verdict != Verdict::Trivial) {
    out.ok = false;
    out.counterexample = cycle_word;
    return out;
  }

  // Count reduced words of length < girth.
  std::int64_t total = 0;
  {
    std::int64_t layer = k;
    for (int len = 1; len < gv && total <= word_budget; ++len) {
      total += layer;
      if (layer > word_budget) break;
      layer *= (k - 1);
    }
  }

  out.ok = true;
  if (total <= word_budget) {
    out.exhaustive = true;
    Word w;
    auto rec = [&](auto&& self) -> bool {
      if (!w.empty()) {
        ++out.words_checked;
        if (solver.is_trivial(w).verdict == Verdict::Trivial) {
          out.ok = false;
          out.counterexample = w;
          return false;
        }
      }
      if (static_cast<int>(w.size()) + 1 >= gv) return true;
      for (Letter s = 0; s < k; ++s) {
        if (!w.empty() && s == inverse(w.back())) continue;
        w.push_back(s);
        bool cont = self(self);
        w.pop_back();
        if (!cont) return false;
      }
      return true;
    };
    rec(rec);
  } else {
    out.exhaustive = false;
    SeededRng rng(sample_seed);
    for (int i = 0; i < sample_count; ++i) {
      int len = 1 + static_cast<int>(rng.below(gv - 1));
      Word w;
      for (int j = 0; j < len; ++j) {
        Letter s;
        do {
          s = static_cast<Letter>(rng.below(k));
        } while (!w.empty() && s == inverse(w.back()));
        w.push_back(s);
      }
      ++out.words_checked;
      if (solver.is_trivial(w).verdict == Verdict::Trivial) {
        out.ok = false;
        out.counterexample = w;
        return out;
      }
    }
  }
  return out;
}

EmbeddingCheck verify_embedding(const Solver& solver, int budget_radius,
                                std::size_t element_budget) {
  const LabelledGraph& g = solver.graph();
  const Certificate& cert = solver.certificate();

  EmbeddingCheck out;
  out.budget_radius = budget_radius;

  if (!cert.pass) {
    if (cert.folded && !cert.girth) {
      // Forest: the presented group is free on the generators and distinct
      // reduced words are distinct elements, so path words (reduced, length
      // = distance) admit no shortcuts.
      out.free_group = true;
      out.ok = true;
      return out;
    }
    throw Error::precondition("verify_embedding: certificate did not pass");
  }
  if (budget_radius < 0)
    throw Error::precondition("verify_embedding: negative radius");

  auto dist = all_pairs_distances(g);
  int max_d = 0;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v = u + 1; v < g.vertex_count(); ++v)
      if (dist[u][v] <= budget_radius) max_d = std::max(max_d, dist[u][v]);

  out.ok = true;
  if (max_d == 0) return out;

  BallIndex ball = build_ball_index(solver, max_d - 1, element_budget);
  for (VertexId u = 0; u < g.vertex_count() && out.ok; ++u) {
    for (VertexId v = u + 1; v < g.vertex_count() && out.ok; ++v) {
      int d = dist[u][v];
      if (d < 1 || d > budget_radius) continue;
      ++out.pairs_checked;
      Word x = shortest_path_word(g, u, v);
      // A shortcut is an element of length <= d-1 equal to x.
      if (ball.find(x, d - 1) >= 0) {
        out.ok = false;
        out.failure = "vertices '" + g.vertex_name(u) + "' and '" +
                      g.vertex_name(v) + "' at graph distance " +
                      std::to_string(d) +
                      " are closer in the Cayley graph";
      }
    }
  }
  return out;
}

}  // namespace gsc
