#include "gsc/shapes.hpp"

#include <algorithm>

#include "gsc/error.hpp"

namespace gsc {

namespace {

std::string padded(const std::string& prefix, int i, int width) {
  std::string n = std::to_string(i);
  while (static_cast<int>(n.size()) < width) n.insert(n.begin(), '0');
  return prefix + n;
}

int width_for(int count) {
  int w = 1;
  for (int c = 10; c < count; c *= 10) ++w;
  return w;
}

}  // namespace

namespace shapes {

Multigraph theta(int arms, int arm_len) {
  if (arms < 1 || arm_len < 1)
    throw Error::precondition("theta shape needs arms >= 1 and arm-len >= 1");
  Multigraph m;
  m.vertex_names.push_back("h0");
  m.vertex_names.push_back("h1");
  int inner = arm_len - 1;
  int w = width_for(std::max(arms, inner));
  for (int a = 0; a < arms; ++a) {
    int prev = 0;  // h0
    for (int i = 0; i < inner; ++i) {
      m.vertex_names.push_back(padded("m", a, w) + padded("_", i, w));
      int cur = static_cast<int>(m.vertex_names.size()) - 1;
      m.edges.emplace_back(prev, cur);
      prev = cur;
    }
    m.edges.emplace_back(prev, 1);  // h1
  }
  return m;
}

Multigraph cycle(int n) {
  if (n < 1) throw Error::precondition("cycle shape needs n >= 1");
  Multigraph m;
  int w = width_for(n);
  for (int i = 0; i < n; ++i) m.vertex_names.push_back(padded("v", i, w));
  for (int i = 0; i < n; ++i) m.edges.emplace_back(i, (i + 1) % n);
  return m;
}

Multigraph bouquet(int petals) {
  if (petals < 1) throw Error::precondition("bouquet shape needs petals >= 1");
  Multigraph m;
  m.vertex_names.push_back("v");
  for (int i = 0; i < petals; ++i) m.edges.emplace_back(0, 0);
  return m;
}

Multigraph path(int n) {
  if (n < 1) throw Error::precondition("path shape needs n >= 1");
  Multigraph m;
  int w = width_for(n + 1);
  for (int i = 0; i <= n; ++i) m.vertex_names.push_back(padded("v", i, w));
  for (int i = 0; i < n; ++i) m.edges.emplace_back(i, i + 1);
  return m;
}

}  // namespace shapes

std::uint64_t SeededRng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint32_t SeededRng::below(std::uint32_t n) {
  if (n <= 1) return 0;
  std::uint64_t bound = ~0ULL - (~0ULL % n);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= bound);
  return static_cast<std::uint32_t>(x % n);
}

LabelledGraph random_labelling(const Multigraph& shape,
                               const Alphabet& alphabet, std::uint64_t seed,
                               int max_restarts) {
  int n = static_cast<int>(shape.vertex_names.size());
  int k = alphabet.letter_count();

  std::vector<int> degree(n, 0);
  for (auto [u, v] : shape.edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error::precondition("random_labelling: edge endpoint out of range");
    ++degree[u];
    ++degree[v];
  }
  for (int v = 0; v < n; ++v) {
    if (degree[v] > k)
      throw Error::precondition(
          "random_labelling: vertex '" + shape.vertex_names[v] +
          "' has degree " + std::to_string(degree[v]) + " > 2m = " +
          std::to_string(k) + "; no folded labelling exists");
  }

  SeededRng rng(seed);
  std::vector<char> used(static_cast<std::size_t>(n) * k);
  std::vector<Letter> chosen(shape.edges.size());

  for (int attempt = 0; attempt <= max_restarts; ++attempt) {
    std::fill(used.begin(), used.end(), 0);
    bool ok = true;
    for (std::size_t e = 0; e < shape.edges.size() && ok; ++e) {
      auto [u, v] = shape.edges[e];
      std::vector<Letter> candidates;
      for (Letter s = 0; s < k; ++s) {
        if (used[static_cast<std::size_t>(u) * k + s]) continue;
        if (used[static_cast<std::size_t>(v) * k + inverse(s)]) continue;
        candidates.push_back(s);
      }
      if (candidates.empty()) {
        ok = false;
        break;
      }
      Letter s = candidates[rng.below(static_cast<std::uint32_t>(
          candidates.size()))];
      chosen[e] = s;
      used[static_cast<std::size_t>(u) * k + s] = 1;
      used[static_cast<std::size_t>(v) * k + inverse(s)] = 1;
    }
    if (!ok) continue;

    std::vector<std::tuple<std::string, std::string, Letter>> edges;
    edges.reserve(shape.edges.size());
    for (std::size_t e = 0; e < shape.edges.size(); ++e) {
      auto [u, v] = shape.edges[e];
      edges.emplace_back(shape.vertex_names[u], shape.vertex_names[v],
                         chosen[e]);
    }
    return LabelledGraph::from_edges(alphabet, edges);
  }
  throw Error::budget("random_labelling: no folded labelling found after " +
                      std::to_string(max_restarts) + " restarts");
}

}  // namespace gsc
