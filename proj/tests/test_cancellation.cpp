#include <algorithm>
#include <set>

#include "doctest.h"
#include "gsc/cancellation.hpp"
#include "gsc/error.hpp"
#include "gsc/shapes.hpp"
#include "test_util.hpp"

using namespace gsc;
using gsc::test::load_fixture;

namespace {

// A circle whose edges all carry pairwise distinct letters.
LabelledGraph distinct_circle(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  auto a = make_alphabet(names);
  std::vector<std::tuple<std::string, std::string, Letter>> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back("v" + std::to_string(i),
                       "v" + std::to_string((i + 1) % n),
                       static_cast<Letter>(2 * i));
  }
  return LabelledGraph::from_edges(a, edges);
}

}  // namespace

TEST_CASE("product graph of g1 has no transitions") {
  auto g1 = load_fixture("g1.lg");
  auto p = product_graph(g1);
  CHECK(p.state_count() == 2);
  CHECK(p.transitions.empty());
}

TEST_CASE("product graph of g2 is a full shift") {
  auto g2 = load_fixture("g2.lg");
  auto p = product_graph(g2);
  CHECK(p.state_count() == 42);
  // Every off-diagonal state has an a-transition and an a^-1 transition.
  for (VertexId x = 0; x < 7; ++x) {
    for (VertexId y = 0; y < 7; ++y) {
      if (x == y) continue;
      CHECK(p.transition_index(x, y, 0) >= 0);
      CHECK(p.transition_index(x, y, 1) >= 0);
    }
  }
  CHECK(p.transitions.size() == 84);
}

TEST_CASE("product graph of a distinct-letter circle has no transitions") {
  auto g = distinct_circle(5);
  REQUIRE(g.folded());
  auto p = product_graph(g);
  CHECK(p.state_count() == 20);
  CHECK(p.transitions.empty());
}

TEST_CASE("product graph requires folded input") {
  auto bad = LabelledGraph::parse("alphabet a\nedge u v a\nedge u w a\n");
  CHECK_THROWS_AS(product_graph(bad), Error);
}

TEST_CASE("longest_doublet") {
  auto g1 = load_fixture("g1.lg");
  auto r1 = longest_doublet(g1);
  CHECK_FALSE(r1.unbounded);
  CHECK(r1.lambda == 0);

  auto g2 = load_fixture("g2.lg");
  auto r2 = longest_doublet(g2);
  CHECK(r2.unbounded);
  REQUIRE(r2.cycle.has_value());
  CHECK_FALSE(r2.cycle->states.empty());
  // The witness cycle really is a cycle of valid product transitions.
  auto p = product_graph(g2);
  const auto& cyc = *r2.cycle;
  for (std::size_t i = 0; i < cyc.states.size(); ++i) {
    auto [a, b] = cyc.states[i];
    auto idx = p.transition_index(a, b, cyc.letters[i]);
    REQUIRE(idx >= 0);
    auto next = cyc.states[(i + 1) % cyc.states.size()];
    CHECK(p.transitions[idx].to_p == next.first);
    CHECK(p.transitions[idx].to_q == next.second);
  }

  CHECK(longest_doublet(distinct_circle(4)).lambda == 0);
}

TEST_CASE("brute_force_doublets on fixtures") {
  auto g1 = load_fixture("g1.lg");
  CHECK(brute_force_doublets(g1, 4).empty());
  CHECK(brute_force_doublets(g1, 0).empty());

  auto g2 = load_fixture("g2.lg");
  auto words = brute_force_doublets(g2, 3);
  std::set<std::string> texts;
  for (const auto& w : words) texts.insert(word_text(w, g2.alphabet()));
  CHECK(texts ==
        std::set<std::string>{"a", "A", "aa", "AA", "aaa", "AAA"});

  CHECK_THROWS_AS(brute_force_doublets(g1, kMaxBruteForceLen + 1), Error);
}

TEST_CASE("doublet witness immerses from both start vertices") {
  auto a = make_alphabet({"a", "b", "c"});
  SeededRng seeds(2024);
  for (int i = 0; i < 20; ++i) {
    auto g = random_labelling(shapes::theta(3, 3), a, seeds.next());
    auto ld = longest_doublet(g);
    if (ld.unbounded || ld.lambda == 0) continue;
    REQUIRE(ld.witness.has_value());
    CHECK(static_cast<int>(ld.witness->word.size()) == ld.lambda);
    CHECK(is_reduced(ld.witness->word));
    CHECK(ld.witness->start_a != ld.witness->start_b);
    CHECK(walk(g, ld.witness->start_a, ld.witness->word).has_value());
    CHECK(walk(g, ld.witness->start_b, ld.witness->word).has_value());
  }
}

TEST_CASE("oracle equivalence: longest_doublet vs brute force") {
  auto abc = make_alphabet({"a", "b", "c"});
  auto ab = make_alphabet({"a", "b"});
  std::vector<LabelledGraph> graphs;
  graphs.push_back(load_fixture("g1.lg"));
  graphs.push_back(load_fixture("g2.lg"));
  graphs.push_back(distinct_circle(6));
  SeededRng seeds(31337);
  for (int i = 0; i < 8; ++i) {
    graphs.push_back(random_labelling(shapes::theta(3, 2), abc, seeds.next()));
    graphs.push_back(random_labelling(shapes::cycle(5), ab, seeds.next()));
    graphs.push_back(random_labelling(shapes::theta(2, 3), ab, seeds.next()));
  }
  for (const auto& g : graphs) {
    CAPTURE(g.to_file_text());
    REQUIRE(g.edge_count() <= 12);
    auto ld = longest_doublet(g);
    if (!ld.unbounded) {
      auto words = brute_force_doublets(g, ld.lambda + 1);
      int max_len = 0;
      for (const auto& w : words)
        max_len = std::max(max_len, static_cast<int>(w.size()));
      CHECK(max_len == ld.lambda);
    } else {
      int gv = girth(g).value_or(0);
      auto words = brute_force_doublets(g, gv + 12);
      int max_len = 0;
      for (const auto& w : words)
        max_len = std::max(max_len, static_cast<int>(w.size()));
      CHECK(max_len == gv + 12);  // doublets at every length
    }
  }
}

TEST_CASE("doublet set is closed under inversion") {
  auto ab = make_alphabet({"a", "b"});
  SeededRng seeds(7);
  for (int i = 0; i < 10; ++i) {
    auto g = random_labelling(shapes::cycle(6), ab, seeds.next());
    auto words = brute_force_doublets(g, 4);
    std::set<Word> set(words.begin(), words.end());
    for (const auto& w : words) CHECK(set.count(invert(w)) == 1);
  }
}

TEST_CASE("lambda is zero iff no letter repeats across sources") {
  auto check_one = [](const LabelledGraph& g) {
    bool repeat = false;
    for (Letter s = 0; s < g.alphabet().letter_count() && !repeat; ++s) {
      std::set<VertexId> sources;
      for (DartId d = 0; d < g.dart_count(); ++d) {
        if (g.dart(d).label == s) sources.insert(g.dart(d).source);
      }
      if (sources.size() >= 2) repeat = true;
    }
    auto ld = longest_doublet(g);
    bool lambda_zero = !ld.unbounded && ld.lambda == 0;
    CHECK(lambda_zero == !repeat);
  };
  check_one(load_fixture("g1.lg"));
  check_one(load_fixture("g2.lg"));
  check_one(distinct_circle(5));
  auto abc = make_alphabet({"a", "b", "c"});
  SeededRng seeds(55);
  for (int i = 0; i < 10; ++i)
    check_one(random_labelling(shapes::theta(3, 2), abc, seeds.next()));
}

TEST_CASE("certify g1: the two-points-three-edges example passes") {
  auto g1 = load_fixture("g1.lg");
  auto c = certify(g1);
  CHECK(c.folded);
  CHECK(c.girth == 2);
  CHECK(c.diameter == 1);
  CHECK(c.lambda_kind == Certificate::Lambda::Finite);
  CHECK(c.lambda == 0);
  CHECK(c.ratio == "0/2");
  CHECK(c.pass);
  CHECK_FALSE(granted_properties(c).empty());
}

TEST_CASE("certify g2: unbounded doublets fail") {
  auto c = certify(load_fixture("g2.lg"));
  CHECK(c.folded);
  CHECK(c.girth == 7);
  CHECK(c.lambda_kind == Certificate::Lambda::Unbounded);
  CHECK_FALSE(c.pass);
  CHECK_FALSE(c.failure_reasons.empty());
  CHECK(granted_properties(c).empty());
}

TEST_CASE("certify rejects unfolded and acyclic graphs") {
  auto bad = LabelledGraph::parse("alphabet a\nedge u v a\nedge u w a\n");
  auto c = certify(bad);
  CHECK_FALSE(c.folded);
  CHECK_FALSE(c.pass);
  CHECK(c.lambda_kind == Certificate::Lambda::NotComputed);

  auto path = LabelledGraph::parse("alphabet a b\nedge u v a\nedge v w b\n");
  auto cp = certify(path);
  CHECK(cp.folded);
  CHECK_FALSE(cp.girth.has_value());
  CHECK_FALSE(cp.pass);
}

TEST_CASE("verdict boundary is exact integer arithmetic") {
  // A 12-cycle with distinct letters except one letter planted on two
  // non-adjacent edges in a way that keeps the graph folded: doublet length
  // is exactly 1, girth 12, and 6*1 < 12 fails only at equality.
  auto build = [](int n, int repeat_at) {
    std::vector<std::string> names;
    for (int i = 0; i < n - 1; ++i)
      names.emplace_back(1, static_cast<char>('a' + i));
    auto a = make_alphabet(names);
    std::vector<std::tuple<std::string, std::string, Letter>> edges;
    char v = 'a';  // vertex names va, vb, ...
    for (int i = 0; i < n; ++i) {
      Letter s = i < repeat_at ? static_cast<Letter>(2 * i)
                               : static_cast<Letter>(2 * (i % (n - 1)));
      edges.emplace_back(std::string("v") + static_cast<char>(v + i),
                         std::string("v") + static_cast<char>(v + (i + 1) % n),
                         s);
    }
    return LabelledGraph::from_edges(a, edges);
  };
  // 12-cycle, letters a..k and then a again: lambda = 1, 6 >= 12 is false,
  // so it passes; on a 6-cycle the same trick gives 6*1 >= 6, failing.
  auto pass12 = build(12, 11);
  auto c12 = certify(pass12);
  CHECK(c12.girth == 12);
  CHECK(c12.lambda == 1);
  CHECK(c12.pass);  // 6*1 < 12

  auto fail6 = build(6, 5);
  auto c6 = certify(fail6);
  CHECK(c6.girth == 6);
  CHECK(c6.lambda == 1);
  CHECK_FALSE(c6.pass);  // 6*1 == 6 is not < 6
}
