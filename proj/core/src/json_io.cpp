#include "gsc/json_io.hpp"

#include "gsc/error.hpp"

namespace gsc {

namespace {

Json word_json(const Word& w, const LabelledGraph& g) {
  return word_text(w, g.alphabet());
}

Word word_from_json(const Json& j, const LabelledGraph& g) {
  if (!j.is_string()) throw Error::parse("expected a word string");
  return parse_word(j.get<std::string>(), g.alphabet());
}

VertexId vertex_from_json(const Json& j, const LabelledGraph& g) {
  if (!j.is_string()) throw Error::parse("expected a vertex name");
  auto v = g.find_vertex(j.get<std::string>());
  if (!v) throw Error::parse("unknown vertex '" + j.get<std::string>() + "'");
  return *v;
}

}  // namespace

Json certificate_json(const Certificate& c, const LabelledGraph& g) {
  Json j;
  j["schema"] = "gsc.certificate/1";
  j["folded"] = c.folded;
  if (!c.folded) {
    Json viols = Json::array();
    for (const auto& v : c.folded_violations) {
      viols.push_back({{"vertex", g.vertex_name(v.vertex)},
                       {"label", g.alphabet().letter_name(v.label)}});
    }
    j["folded_violations"] = viols;
  }
  j["girth"] = c.girth ? Json(*c.girth) : Json(nullptr);
  j["diameter"] = c.diameter;
  switch (c.lambda_kind) {
    case Certificate::Lambda::Finite:
      j["lambda"] = c.lambda;
      break;
    case Certificate::Lambda::Unbounded:
      j["lambda"] = "unbounded";
      break;
    case Certificate::Lambda::NotComputed:
      j["lambda"] = nullptr;
      break;
  }
  j["ratio"] = c.ratio.empty() ? Json(nullptr) : Json(c.ratio);
  j["verdict"] = c.pass ? "pass" : "fail";
  if (c.witness && (c.witness->word.size() > 0)) {
    j["witness"] = {{"word", word_json(c.witness->word, g)},
                    {"starts",
                     {g.vertex_name(c.witness->start_a),
                      g.vertex_name(c.witness->start_b)}}};
  } else if (c.cycle_witness) {
    Json states = Json::array();
    for (auto [p, q] : c.cycle_witness->states)
      states.push_back({g.vertex_name(p), g.vertex_name(q)});
    j["witness"] = {{"cycle_states", states},
                    {"letters", word_json(c.cycle_witness->letters, g)}};
  } else {
    j["witness"] = nullptr;
  }
  if (!c.failure_reasons.empty()) j["failure_reasons"] = c.failure_reasons;
  auto granted = granted_properties(c);
  if (!granted.empty()) j["granted"] = granted;
  return j;
}

Json presentation_json(const Presentation& p) {
  Json j;
  j["schema"] = "gsc.presentation/1";
  Json gens = Json::array();
  for (int i = 0; i < p.alphabet.size(); ++i)
    gens.push_back(p.alphabet.generator_name(i));
  j["generators"] = gens;
  Json relators = Json::array();
  for (const Word& r : p.relators) {
    Json tokens = Json::array();
    for (Letter s : r) tokens.push_back(p.alphabet.letter_name(s));
    relators.push_back(tokens);
  }
  j["relators"] = relators;
  j["rank"] = p.rank_pi1;
  j["m"] = p.generator_count;
  j["infinite"] = infinite_status_label(p.infinite);
  j["text"] = render_text(p);
  if (!p.warnings.empty()) j["warnings"] = p.warnings;
  return j;
}

Json verdict_json(const WpResult& r, const LabelledGraph& g) {
  Json j;
  j["schema"] = "gsc.verdict/1";
  j["word"] = word_json(r.trace.input, g);
  j["verdict"] = verdict_label(r.verdict);
  Json steps = Json::array();
  for (const DehnStep& st : r.trace.steps) {
    steps.push_back({{"rotation", st.rotation},
                     {"start", st.start},
                     {"length", st.length},
                     {"start_vertex", g.vertex_name(st.start_vertex)},
                     {"end_vertex", g.vertex_name(st.end_vertex)},
                     {"return_word", word_json(st.return_word, g)},
                     {"replacement", word_json(st.replacement, g)}});
  }
  j["steps"] = steps;
  j["final"] = word_json(r.trace.final_word, g);
  return j;
}

Json filling_json(const FillingCertificate& c, const LabelledGraph& g) {
  Json j;
  j["schema"] = "gsc.filling/1";
  j["word"] = word_json(c.word, g);
  j["start"] = g.vertex_name(c.start);
  Json tiles = Json::array();
  for (const auto& t : c.tiles)
    tiles.push_back(
        {{"word", word_json(t.word, g)}, {"start", g.vertex_name(t.start)}});
  j["tiles"] = tiles;
  Json splits = Json::array();
  for (const auto& s : c.splits)
    splits.push_back({{"prefix", word_json(s.prefix, g)},
                      {"connector", word_json(s.connector, g)}});
  j["splits"] = splits;
  j["tile_count"] = c.tile_count;
  return j;
}

FillingCertificate filling_from_json(const Json& j, const LabelledGraph& g) {
  FillingCertificate c;
  try {
    c.word = word_from_json(j.at("word"), g);
    c.start = vertex_from_json(j.at("start"), g);
    for (const Json& t : j.at("tiles")) {
      c.tiles.push_back({word_from_json(t.at("word"), g),
                         vertex_from_json(t.at("start"), g)});
    }
    for (const Json& s : j.at("splits")) {
      c.splits.push_back({word_from_json(s.at("prefix"), g),
                          word_from_json(s.at("connector"), g)});
    }
    c.tile_count = j.at("tile_count").get<int>();
  } catch (const Json::exception& e) {
    throw Error::parse(std::string("filling certificate: ") + e.what());
  }
  return c;
}

Json ball_json(const CayleyBall& b, const LabelledGraph& g) {
  Json j;
  j["schema"] = "gsc.ball/1";
  j["radius"] = b.radius;
  j["size"] = b.elements.size();
  Json elems = Json::array();
  for (const Word& w : b.elements) elems.push_back(word_json(w, g));
  j["elements"] = elems;
  Json edges = Json::array();
  for (const auto& e : b.edges)
    edges.push_back({{"from", e.from},
                     {"label", g.alphabet().letter_name(e.label)},
                     {"to", e.to}});
  j["adjacency"] = edges;
  return j;
}

Json relation_check_json(const RelationCheck& r, const LabelledGraph& g) {
  Json j;
  j["schema"] = "gsc.relation_check/1";
  j["ok"] = r.ok;
  j["mode"] = r.exhaustive ? "exhaustive" : "sampled";
  j["words_checked"] = r.words_checked;
  j["girth_cycle_word"] = word_json(r.girth_cycle_word, g);
  j["counterexample"] =
      r.counterexample ? Json(word_json(*r.counterexample, g)) : Json(nullptr);
  return j;
}

Json embedding_check_json(const EmbeddingCheck& e) {
  Json j;
  j["schema"] = "gsc.embedding_check/1";
  j["ok"] = e.ok;
  j["budget_radius"] = e.budget_radius;
  j["pairs_checked"] = e.pairs_checked;
  j["free_group"] = e.free_group;
  j["failure"] = e.failure.empty() ? Json(nullptr) : Json(e.failure);
  return j;
}

}  // namespace gsc
