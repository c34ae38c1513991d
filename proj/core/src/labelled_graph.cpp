#include "gsc/labelled_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "gsc/error.hpp"

namespace gsc {

namespace {

struct ParsedLine {
  std::vector<std::string> fields;
  int number;
};

std::vector<ParsedLine> tokenize(std::string_view text) {
  std::vector<ParsedLine> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    ParsedLine pl;
    pl.number = number;
    std::string tok;
    while (in >> tok) pl.fields.push_back(tok);
    if (!pl.fields.empty()) lines.push_back(std::move(pl));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

}  // namespace

LabelledGraph LabelledGraph::parse(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw Error::parse("graph file: empty");

  const ParsedLine& head = lines.front();
  if (head.fields[0] != "alphabet")
    throw Error::parse("graph file: first directive must be 'alphabet'");
  Alphabet alphabet = make_alphabet(
      std::vector<std::string>(head.fields.begin() + 1, head.fields.end()));

  std::vector<std::tuple<std::string, std::string, Letter>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const ParsedLine& pl = lines[i];
    if (pl.fields[0] == "alphabet")
      throw Error::parse("graph file: duplicate 'alphabet' directive (line " +
                         std::to_string(pl.number) + ")");
    if (pl.fields[0] != "edge")
      throw Error::parse("graph file: unknown directive '" + pl.fields[0] +
                         "' (line " + std::to_string(pl.number) + ")");
    if (pl.fields.size() != 4)
      throw Error::parse("graph file: 'edge' needs <u> <v> <label> (line " +
                         std::to_string(pl.number) + ")");
    auto s = alphabet.find(pl.fields[3]);
    if (!s)
      throw Error::parse("graph file: unknown label '" + pl.fields[3] +
                         "' (line " + std::to_string(pl.number) + ")");
    edges.emplace_back(pl.fields[1], pl.fields[2], *s);
  }
  return from_edges(std::move(alphabet), edges);
}

LabelledGraph LabelledGraph::from_edges(
    Alphabet alphabet,
    const std::vector<std::tuple<std::string, std::string, Letter>>& edges) {
  if (edges.empty()) throw Error::parse("graph: no edges");

  std::set<std::string> name_set;
  for (const auto& [u, v, s] : edges) {
    name_set.insert(u);
    name_set.insert(v);
  }

  LabelledGraph g;
  g.alphabet_ = std::move(alphabet);
  g.names_.assign(name_set.begin(), name_set.end());
  std::map<std::string, VertexId> id_of;
  for (VertexId v = 0; v < g.vertex_count(); ++v) id_of[g.names_[v]] = v;

  for (const auto& [u, v, s] : edges) {
    VertexId a = id_of[u], b = id_of[v];
    g.darts_.push_back({a, b, s});
    g.darts_.push_back({b, a, inverse(s)});
  }

  int k = g.alphabet_.letter_count();
  g.out_.assign(g.vertex_count(), {});
  for (DartId d = 0; d < g.dart_count(); ++d)
    g.out_[g.darts_[d].source].push_back(d);
  for (auto& list : g.out_) {
    std::sort(list.begin(), list.end(), [&g](DartId x, DartId y) {
      const Dart& dx = g.darts_[x];
      const Dart& dy = g.darts_[y];
      if (dx.target != dy.target) return dx.target < dy.target;
      int rx = g.alphabet_.name_rank(dx.label);
      int ry = g.alphabet_.name_rank(dy.label);
      if (rx != ry) return rx < ry;
      return x < y;
    });
  }

  g.by_label_.assign(static_cast<std::size_t>(g.vertex_count()) * k, -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (DartId d : g.out_[v]) {
      Letter s = g.darts_[d].label;
      DartId& slot = g.by_label_[static_cast<std::size_t>(v) * k + s];
      if (slot == -1) {
        slot = d;
      } else {
        g.folded_report_.folded = false;
        g.folded_report_.violations.push_back({v, s, slot, d});
      }
    }
  }

  // Connectivity (darts are paired, so this is the undirected reachability).
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<VertexId> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (DartId d : g.out_[v]) {
      VertexId t = g.darts_[d].target;
      if (!seen[t]) {
        seen[t] = 1;
        ++reached;
        queue.push_back(t);
      }
    }
  }
  if (reached != g.vertex_count())
    throw Error::parse("graph: disconnected (analyze components separately)");

  return g;
}

std::optional<VertexId> LabelledGraph::find_vertex(
    std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

std::vector<VertexId> LabelledGraph::filament_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (out_[v].size() < 2) out.push_back(v);
  }
  return out;
}

std::string LabelledGraph::to_file_text() const {
  std::ostringstream out;
  out << "alphabet";
  for (int i = 0; i < alphabet_.size(); ++i)
    out << ' ' << alphabet_.generator_name(i);
  out << '\n';
  for (DartId d = 0; d < dart_count(); d += 2) {
    const Dart& e = darts_[d];
    out << "edge " << names_[e.source] << ' ' << names_[e.target] << ' '
        << alphabet_.letter_name(e.label) << '\n';
  }
  return out.str();
}

FoldedReport check_folded(const LabelledGraph& g) { return g.folded_report(); }

namespace {

// BFS distance from `from` to `to` ignoring the darts of one unoriented
// edge; -1 if unreachable.
int distance_avoiding(const LabelledGraph& g, VertexId from, VertexId to,
                      DartId skip_a, DartId skip_b) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<VertexId> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    if (v == to) return dist[v];
    for (DartId d : g.out_darts(v)) {
      if (d == skip_a || d == skip_b) continue;
      VertexId t = g.dart(d).target;
      if (dist[t] == -1) {
        dist[t] = dist[v] + 1;
        queue.push_back(t);
      }
    }
  }
  return dist[to];
}

// Shortest dart path from -> to avoiding one edge; empty when from == to.
std::optional<std::vector<DartId>> path_avoiding(const LabelledGraph& g,
                                                 VertexId from, VertexId to,
                                                 DartId skip_a, DartId skip_b) {
  std::vector<DartId> parent(g.vertex_count(), -1);
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<VertexId> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (DartId d : g.out_darts(v)) {
      if (d == skip_a || d == skip_b) continue;
      VertexId t = g.dart(d).target;
      if (!seen[t]) {
        seen[t] = 1;
        parent[t] = d;
        queue.push_back(t);
      }
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<DartId> path;
  VertexId cur = to;
  while (cur != from) {
    DartId d = parent[cur];
    path.push_back(d);
    cur = g.dart(d).source;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<GirthWitness> girth_witness(const LabelledGraph& g) {
  std::optional<GirthWitness> best;
  for (DartId d = 0; d < g.dart_count(); d += 2) {
    const Dart& e = g.dart(d);
    int limit = best ? best->length : -1;
    if (limit == 1) break;  // a loop is already minimal
    if (e.source == e.target) {
      best = GirthWitness{1, {d}};
      continue;
    }
    int dist = distance_avoiding(g, e.source, e.target, d, twin(d));
    if (dist < 0) continue;
    if (!best || dist + 1 < best->length) {
      auto back = path_avoiding(g, e.target, e.source, d, twin(d));
      std::vector<DartId> cycle{d};
      cycle.insert(cycle.end(), back->begin(), back->end());
      best = GirthWitness{dist + 1, std::move(cycle)};
    }
  }
  return best;
}

std::optional<int> girth(const LabelledGraph& g) {
  auto w = girth_witness(g);
  if (!w) return std::nullopt;
  return w->length;
}

std::vector<std::vector<int>> all_pairs_distances(const LabelledGraph& g) {
  std::vector<std::vector<int>> dist;
  dist.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> row(g.vertex_count(), -1);
    std::deque<VertexId> queue{v};
    row[v] = 0;
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (DartId d : g.out_darts(x)) {
        VertexId t = g.dart(d).target;
        if (row[t] == -1) {
          row[t] = row[x] + 1;
          queue.push_back(t);
        }
      }
    }
    dist.push_back(std::move(row));
  }
  return dist;
}

int diameter(const LabelledGraph& g) {
  int best = 0;
  auto dist = all_pairs_distances(g);
  for (const auto& row : dist) {
    for (int d : row) best = std::max(best, d);
  }
  return best;
}

std::optional<std::vector<DartId>> walk(const LabelledGraph& g, VertexId start,
                                        const Word& w) {
  if (!g.folded())
    throw Error::precondition("walk: graph is not folded");
  std::vector<DartId> path;
  path.reserve(w.size());
  VertexId cur = start;
  for (Letter s : w) {
    DartId d = g.out_dart_by_label(cur, s);
    if (d < 0) return std::nullopt;
    path.push_back(d);
    cur = g.dart(d).target;
  }
  return path;
}

Word shortest_path_word(const LabelledGraph& g, VertexId u, VertexId v) {
  std::vector<DartId> parent(g.vertex_count(), -1);
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<VertexId> queue{u};
  seen[u] = 1;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    if (x == v) break;
    for (DartId d : g.out_darts(x)) {
      VertexId t = g.dart(d).target;
      if (!seen[t]) {
        seen[t] = 1;
        parent[t] = d;
        queue.push_back(t);
      }
    }
  }
  if (!seen[v])
    throw Error::precondition("shortest_path_word: vertices not connected");
  Word w;
  VertexId cur = v;
  while (cur != u) {
    DartId d = parent[cur];
    w.push_back(g.dart(d).label);
    cur = g.dart(d).source;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

CycleFamily spanning_tree(const LabelledGraph& g) {
  return spanning_tree(g, 0);
}

CycleFamily spanning_tree(const LabelledGraph& g, VertexId root) {
  CycleFamily fam;
  fam.base = root;
  fam.tree_edge.assign(g.edge_count(), 0);
  fam.tree_words.assign(g.vertex_count(), {});

  std::vector<DartId> parent(g.vertex_count(), -1);
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<VertexId> queue{root};
  seen[root] = 1;
  std::vector<VertexId> order{root};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (DartId d : g.out_darts(v)) {
      VertexId t = g.dart(d).target;
      if (!seen[t]) {
        seen[t] = 1;
        parent[t] = d;
        fam.tree_edge[d / 2] = 1;
        queue.push_back(t);
        order.push_back(t);
      }
    }
  }

  for (VertexId v : order) {
    if (v == root) continue;
    DartId d = parent[v];
    Word w = fam.tree_words[g.dart(d).source];
    w.push_back(g.dart(d).label);
    fam.tree_words[v] = std::move(w);
  }

  auto tree_path_from_root = [&](VertexId v) {
    std::vector<DartId> path;
    VertexId cur = v;
    while (cur != root) {
      DartId d = parent[cur];
      path.push_back(d);
      cur = g.dart(d).source;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  for (int e = 0; e < g.edge_count(); ++e) {
    if (fam.tree_edge[e]) continue;
    DartId d = static_cast<DartId>(2 * e);
    VertexId x = g.dart(d).source;
    VertexId y = g.dart(d).target;
    std::vector<DartId> cycle = tree_path_from_root(x);
    cycle.push_back(d);
    std::vector<DartId> back = tree_path_from_root(y);
    for (auto it = back.rbegin(); it != back.rend(); ++it)
      cycle.push_back(twin(*it));
    Word w;
    w.reserve(cycle.size());
    for (DartId cd : cycle) w.push_back(g.dart(cd).label);
    fam.cycle_edges.push_back(e);
    fam.cycles.push_back(std::move(cycle));
    fam.cycle_words.push_back(std::move(w));
  }
  return fam;
}

int rank(const LabelledGraph& g) {
  return g.edge_count() - g.vertex_count() + 1;
}

}  // namespace gsc
