#include "doctest.h"
#include "gsc/dehn.hpp"
#include "gsc/error.hpp"
#include "gsc/presentation.hpp"
#include "gsc/shapes.hpp"
#include "test_util.hpp"

using namespace gsc;
using gsc::test::load_fixture;

TEST_CASE("presentation of g1 is <a,b,c | bA, cA>") {
  auto g1 = load_fixture("g1.lg");
  auto pres = make_presentation(g1, spanning_tree(g1));
  CHECK(pres.rank_pi1 == 2);
  CHECK(pres.generator_count == 3);
  REQUIRE(pres.relators.size() == 2);
  CHECK(render_text(pres) == "<a,b,c | bA, cA>");
  CHECK(pres.warnings.empty());
}

TEST_CASE("tree graph presents a free group") {
  auto path = LabelledGraph::parse("alphabet a b\nedge u v a\nedge v w b\n");
  auto pres = make_presentation(path, spanning_tree(path));
  CHECK(pres.relators.empty());
  CHECK(render_text(pres) == "<a,b | >");
}

TEST_CASE("presentation of g2 is <a | a^7>, emitted despite the failed "
          "certificate") {
  auto g2 = load_fixture("g2.lg");
  auto pres = make_presentation(g2, spanning_tree(g2));
  REQUIRE(pres.relators.size() == 1);
  CHECK(word_text(pres.relators[0], g2.alphabet()) == "aaaaaaa");
  CHECK(render_text(pres) == "<a | aaaaaaa>");
}

TEST_CASE("every relator closes up at its recorded base vertex") {
  auto check = [](const LabelledGraph& g) {
    auto pres = make_presentation(g, spanning_tree(g));
    REQUIRE(pres.relators.size() == pres.relator_bases.size());
    for (std::size_t i = 0; i < pres.relators.size(); ++i) {
      auto p = walk(g, pres.relator_bases[i], pres.relators[i]);
      REQUIRE(p.has_value());
      CHECK(g.dart(p->back()).target == pres.relator_bases[i]);
      CHECK(is_cyclically_reduced(pres.relators[i]));
    }
    // The raw cycle words close at the family base.
    for (const auto& w : pres.origin.cycle_words) {
      auto p = walk(g, pres.origin.base, w);
      REQUIRE(p.has_value());
      CHECK(g.dart(p->back()).target == pres.origin.base);
    }
  };
  check(load_fixture("g1.lg"));
  check(load_fixture("g2.lg"));
  auto a = make_alphabet({"a", "b", "c"});
  SeededRng seeds(17);
  for (int i = 0; i < 10; ++i)
    check(random_labelling(shapes::theta(3, 3), a, seeds.next()));
}

TEST_CASE("infiniteness criterion") {
  auto g1 = load_fixture("g1.lg");
  auto c1 = certify(g1);
  auto p1 = make_presentation(g1, spanning_tree(g1));
  CHECK(infiniteness_criterion(c1, p1) == InfiniteStatus::CriterionNotMet);

  auto g2 = load_fixture("g2.lg");
  auto c2 = certify(g2);
  auto p2 = make_presentation(g2, spanning_tree(g2));
  CHECK(infiniteness_criterion(c2, p2) == InfiniteStatus::NotApplicable);
}

TEST_CASE("changing the spanning tree changes relators, not the group") {
  // Families based at different vertices give different relators; each
  // relator of either family must be trivial for the word-problem solver,
  // which works from the graph and is family-independent.
  auto g = load_fixture("g1.lg");
  Solver solver(g, certify(g));

  auto fam_u = spanning_tree(g, *g.find_vertex("u"));
  auto fam_v = spanning_tree(g, *g.find_vertex("v"));
  auto pres_u = make_presentation(g, fam_u);
  auto pres_v = make_presentation(g, fam_v);

  // A hand-built alternative family for g1: tree = the b-edge.
  CycleFamily alt;
  alt.base = *g.find_vertex("u");
  alt.tree_edge = {0, 1, 0};  // edges arrive in file order a, b, c
  alt.tree_words.resize(2);
  alt.tree_words[*g.find_vertex("v")] = parse_word("b", g.alphabet());
  for (int e : {0, 2}) {
    DartId d = static_cast<DartId>(2 * e);
    alt.cycle_edges.push_back(e);
    alt.cycles.push_back({d, twin(2 * 1)});
    alt.cycle_words.push_back(
        {g.dart(d).label, g.dart(twin(2 * 1)).label});
  }
  auto pres_alt = make_presentation(g, alt);
  CHECK(render_text(pres_alt) == "<a,b,c | aB, cB>");
  CHECK(render_text(pres_alt) != render_text(pres_u));

  for (const auto* pres : {&pres_u, &pres_v, &pres_alt}) {
    for (const auto& r : pres->relators) {
      CHECK(solver.is_trivial(r).verdict == Verdict::Trivial);
    }
  }
}

TEST_CASE("presentation requires a folded graph") {
  auto bad = LabelledGraph::parse("alphabet a\nedge u v a\nedge u w a\n");
  CHECK_THROWS_AS(make_presentation(bad, CycleFamily{}), Error);
}
