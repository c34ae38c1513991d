// gsc: certify graphical small cancellation hypotheses on labelled graphs,
// emit presentations, decide the word problem by Dehn reduction, and verify
// filling/embedding bounds at desk scale. JSON reports on stdout,
// diagnostics on stderr. Exit 0 on a computed result (verdicts live in the
// payload), 2 on input errors, 3 on exhausted budgets.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gsc/cancellation.hpp"
#include "gsc/dehn.hpp"
#include "gsc/error.hpp"
#include "gsc/geometry.hpp"
#include "gsc/json_io.hpp"
#include "gsc/labelled_graph.hpp"
#include "gsc/presentation.hpp"
#include "gsc/shapes.hpp"
#include "gsc/word.hpp"

namespace {

using gsc::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gsc::Error::parse("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string fnv64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << "fnv64:" << std::hex << h;
  return out.str();
}

struct Report {
  Json envelope;
  std::chrono::steady_clock::time_point t0 =
      std::chrono::steady_clock::now();

  explicit Report(const std::string& command) {
    envelope["schema"] = "gsc.report/1";
    envelope["command"] = command;
    envelope["inputs"] = Json::object();
    envelope["warnings"] = Json::array();
  }

  void input(const std::string& key, const std::string& bytes) {
    envelope["inputs"][key] = fnv64(bytes);
  }
  void warn(const std::string& msg) { envelope["warnings"].push_back(msg); }

  void emit(Json result, bool with_timing) {
    envelope["result"] = std::move(result);
    if (with_timing) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      envelope["timing_ms"] = ms;
    }
    std::cout << envelope.dump(2) << '\n';
  }
};

gsc::LabelledGraph load_graph(const std::string& path, Report& report) {
  std::string bytes = read_file(path);
  report.input("graph", bytes);
  gsc::LabelledGraph g = gsc::LabelledGraph::parse(bytes);
  for (gsc::VertexId v : g.filament_vertices()) {
    report.warn("vertex '" + g.vertex_name(v) + "' has degree < 2");
  }
  return g;
}

gsc::VertexId resolve_vertex(const gsc::LabelledGraph& g,
                             const std::string& name) {
  auto v = g.find_vertex(name);
  if (!v) throw gsc::Error::parse("unknown vertex '" + name + "'");
  return *v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "graphical small cancellation toolkit: certificates, presentations, "
      "word problem, fillings"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing,
               "append timing_ms to the report (off by default so reports "
               "are byte-identical)");

  std::string graph_path, word_arg, word_arg2, start_name, cert_path;
  std::string out_path;
  int list_len = -1;
  int radius = -1;
  std::int64_t budget = -1;
  bool text_mode = false;

  auto* check = app.add_subcommand("check", "certify the small cancellation condition");
  check->add_option("graph", graph_path)->required();
  check->add_flag("--text", text_mode);

  auto* doublets =
      app.add_subcommand("doublets", "longest doublet and doublet lists");
  doublets->add_option("graph", graph_path)->required();
  doublets->add_option("--list", list_len,
                       "also enumerate all doublets up to this length");

  auto* present =
      app.add_subcommand("present", "group presentation from a spanning tree");
  present->add_option("graph", graph_path)->required();
  present->add_flag("--text", text_mode);

  auto* wp = app.add_subcommand("wp", "word problem via Dehn reduction");
  wp->add_option("graph", graph_path)->required();
  wp->add_option("word", word_arg)->required();

  auto* equal = app.add_subcommand("equal", "decide u = v in the group");
  equal->add_option("graph", graph_path)->required();
  equal->add_option("u", word_arg)->required();
  equal->add_option("v", word_arg2)->required();

  auto* fill =
      app.add_subcommand("fill", "filling certificate for a closed word");
  fill->add_option("graph", graph_path)->required();
  fill->add_option("start", start_name)->required();
  fill->add_option("word", word_arg)->required();

  auto* verify_fill =
      app.add_subcommand("verify-fill", "replay a filling certificate");
  verify_fill->add_option("graph", graph_path)->required();
  verify_fill->add_option("certificate", cert_path)->required();

  auto* constant =
      app.add_subcommand("constant", "explicit isoperimetric constant");
  constant->add_option("graph", graph_path)->required();

  auto* ball = app.add_subcommand("ball", "Cayley ball around the identity");
  ball->add_option("graph", graph_path)->required();
  ball->add_option("radius", radius)->required();
  ball->add_option("--budget", budget, "element budget");

  auto* verify_relation = app.add_subcommand(
      "verify-relation", "no relation shorter than the girth");
  verify_relation->add_option("graph", graph_path)->required();
  verify_relation->add_option("--budget", budget, "exhaustive word budget");

  auto* verify_embedding = app.add_subcommand(
      "verify-embedding", "graph embeds isometrically in the Cayley graph");
  verify_embedding->add_option("graph", graph_path)->required();
  verify_embedding->add_option("--radius", radius,
                               "pair distance budget (default: diameter)");
  verify_embedding->add_option("--budget", budget, "ball element budget");

  std::string shape_name = "theta";
  int arms = 3, arm_len = 2, cycle_n = 6, petals = 2, path_n = 2;
  int alphabet_size = 3;
  std::uint64_t seed = 0;
  bool until_pass = false;
  int max_seeds = 10'000;
  auto* random = app.add_subcommand(
      "random", "seeded random labelling of a shape, with certificate");
  random->add_option("--shape", shape_name, "theta|cycle|bouquet|path")
      ->check(CLI::IsMember({"theta", "cycle", "bouquet", "path"}));
  random->add_option("--arms", arms);
  random->add_option("--arm-len", arm_len);
  random->add_option("--n", cycle_n, "cycle or path length");
  random->add_option("--petals", petals);
  random->add_option("--alphabet", alphabet_size, "number of generators");
  random->add_option("--seed", seed)->required();
  random->add_flag("--until-pass", until_pass,
                   "increment the seed until the certificate passes");
  random->add_option("--max-seeds", max_seeds);
  random->add_option("-o,--output", out_path, "also write the graph file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // unknown subcommand / bad flags exit 2
  }

  try {
    if (check->parsed()) {
      Report report("check");
      auto g = load_graph(graph_path, report);
      auto cert = gsc::certify(g);
      if (text_mode) {
        std::cout << "verdict: " << (cert.pass ? "pass" : "fail") << '\n';
        std::cout << "girth: " << (cert.girth ? std::to_string(*cert.girth)
                                              : "undefined (forest)")
                  << ", diameter: " << cert.diameter << ", lambda: "
                  << (cert.lambda_kind == gsc::Certificate::Lambda::Finite
                          ? std::to_string(cert.lambda)
                          : std::string("unbounded"))
                  << '\n';
        for (const auto& r : cert.failure_reasons)
          std::cout << "reason: " << r << '\n';
        return 0;
      }
      report.emit(gsc::certificate_json(cert, g), timing);
    } else if (doublets->parsed()) {
      Report report("doublets");
      auto g = load_graph(graph_path, report);
      auto ld = gsc::longest_doublet(g);
      Json j;
      j["schema"] = "gsc.doublets/1";
      j["lambda"] = ld.unbounded ? Json("unbounded") : Json(ld.lambda);
      if (ld.witness) {
        j["witness"] = {{"word", gsc::word_text(ld.witness->word,
                                                g.alphabet())},
                        {"starts",
                         {g.vertex_name(ld.witness->start_a),
                          g.vertex_name(ld.witness->start_b)}}};
      } else {
        j["witness"] = nullptr;
      }
      if (list_len >= 0) {
        auto words = gsc::brute_force_doublets(g, list_len);
        Json list = Json::array();
        for (const auto& w : words)
          list.push_back(gsc::word_text(w, g.alphabet()));
        j["max_len"] = list_len;
        j["words"] = list;
      }
      report.emit(j, timing);
    } else if (present->parsed()) {
      Report report("present");
      auto g = load_graph(graph_path, report);
      auto cert = gsc::certify(g);
      auto pres = gsc::make_presentation(g, gsc::spanning_tree(g));
      pres.infinite = gsc::infiniteness_criterion(cert, pres);
      if (!cert.pass)
        report.warn(
            "certificate failed; the presentation is emitted but no "
            "properties are granted");
      if (text_mode) {
        std::cout << gsc::render_text(pres) << '\n';
        return 0;
      }
      report.emit(gsc::presentation_json(pres), timing);
    } else if (wp->parsed()) {
      Report report("wp");
      auto g = load_graph(graph_path, report);
      report.input("word", word_arg);
      auto w = gsc::parse_word(word_arg, g.alphabet());
      gsc::Solver solver(g, gsc::certify(g));
      report.emit(gsc::verdict_json(solver.is_trivial(w), g), timing);
    } else if (equal->parsed()) {
      Report report("equal");
      auto g = load_graph(graph_path, report);
      report.input("u", word_arg);
      report.input("v", word_arg2);
      auto u = gsc::parse_word(word_arg, g.alphabet());
      auto v = gsc::parse_word(word_arg2, g.alphabet());
      gsc::Solver solver(g, gsc::certify(g));
      Json j = gsc::verdict_json(solver.equal(u, v), g);
      j["u"] = word_arg;
      j["v"] = word_arg2;
      report.emit(j, timing);
    } else if (fill->parsed()) {
      Report report("fill");
      auto g = load_graph(graph_path, report);
      report.input("word", word_arg);
      auto w = gsc::parse_word(word_arg, g.alphabet());
      auto cert = gsc::fill(g, resolve_vertex(g, start_name), w);
      report.emit(gsc::filling_json(cert, g), timing);
    } else if (verify_fill->parsed()) {
      Report report("verify-fill");
      auto g = load_graph(graph_path, report);
      std::string bytes = read_file(cert_path);
      report.input("certificate", bytes);
      auto cert = gsc::filling_from_json(Json::parse(bytes, nullptr, true),
                                         g);
      std::string why;
      bool ok = gsc::verify_filling(g, cert, &why);
      Json j;
      j["schema"] = "gsc.verify_fill/1";
      j["valid"] = ok;
      j["reason"] = ok ? Json(nullptr) : Json(why);
      report.emit(j, timing);
    } else if (constant->parsed()) {
      Report report("constant");
      auto g = load_graph(graph_path, report);
      auto cert = gsc::certify(g);
      auto c = gsc::isoperimetric_constant(cert);  // throws if not passed
      Json j;
      j["schema"] = "gsc.constant/1";
      j["constant"] = c.str();
      j["girth"] = *cert.girth;
      j["lambda"] = cert.lambda;
      report.emit(j, timing);
    } else if (ball->parsed()) {
      Report report("ball");
      auto g = load_graph(graph_path, report);
      gsc::Solver solver(g, gsc::certify(g));
      auto b = budget > 0 ? gsc::cayley_ball(solver, radius,
                                             static_cast<std::size_t>(budget))
                          : gsc::cayley_ball(solver, radius);
      report.emit(gsc::ball_json(b, g), timing);
    } else if (verify_relation->parsed()) {
      Report report("verify-relation");
      auto g = load_graph(graph_path, report);
      gsc::Solver solver(g, gsc::certify(g));
      auto r = budget > 0 ? gsc::verify_shortest_relation(solver, budget)
                          : gsc::verify_shortest_relation(solver);
      report.emit(gsc::relation_check_json(r, g), timing);
    } else if (verify_embedding->parsed()) {
      Report report("verify-embedding");
      auto g = load_graph(graph_path, report);
      gsc::Solver solver(g, gsc::certify(g));
      int r = radius >= 0 ? radius : gsc::diameter(g);
      auto e = budget > 0
                   ? gsc::verify_embedding(solver, r,
                                           static_cast<std::size_t>(budget))
                   : gsc::verify_embedding(solver, r);
      report.emit(gsc::embedding_check_json(e), timing);
    } else if (random->parsed()) {
      Report report("random");
      gsc::Multigraph shape;
      Json shape_json;
      if (shape_name == "theta") {
        shape = gsc::shapes::theta(arms, arm_len);
        shape_json = {{"kind", "theta"}, {"arms", arms}, {"arm_len", arm_len}};
      } else if (shape_name == "cycle") {
        shape = gsc::shapes::cycle(cycle_n);
        shape_json = {{"kind", "cycle"}, {"n", cycle_n}};
      } else if (shape_name == "bouquet") {
        shape = gsc::shapes::bouquet(petals);
        shape_json = {{"kind", "bouquet"}, {"petals", petals}};
      } else {
        shape = gsc::shapes::path(path_n = cycle_n);
        shape_json = {{"kind", "path"}, {"n", path_n}};
      }
      if (alphabet_size < 1 || alphabet_size > 26)
        throw gsc::Error::parse("--alphabet must be between 1 and 26");
      std::vector<std::string> names;
      for (int i = 0; i < alphabet_size; ++i)
        names.emplace_back(1, static_cast<char>('a' + i));
      auto alphabet = gsc::make_alphabet(names);

      std::optional<gsc::LabelledGraph> found;
      gsc::Certificate cert;
      std::uint64_t used_seed = seed;
      int tried = 0;
      for (std::uint64_t s = seed;
           tried < (until_pass ? max_seeds : 1); ++s, ++tried) {
        std::optional<gsc::LabelledGraph> candidate;
        try {
          candidate = gsc::random_labelling(shape, alphabet, s);
        } catch (const gsc::Error& e) {
          if (e.kind() != gsc::Error::Kind::Budget) throw;
          continue;  // this seed found no folded labelling; try the next
        }
        auto c = gsc::certify(*candidate);
        if (!until_pass || c.pass) {
          found = std::move(candidate);
          cert = std::move(c);
          used_seed = s;
          break;
        }
      }
      if (!found)
        throw gsc::Error::budget("random: no passing seed in [" +
                                 std::to_string(seed) + ", " +
                                 std::to_string(seed + max_seeds) + ")");
      std::string file_text = found->to_file_text();
      if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw gsc::Error::parse("cannot write '" + out_path + "'");
        out << file_text;
      }
      Json j;
      j["schema"] = "gsc.random/1";
      j["shape"] = shape_json;
      j["alphabet"] = alphabet_size;
      j["seed"] = used_seed;
      j["seeds_tried"] = tried + 1;
      j["certificate"] = gsc::certificate_json(cert, *found);
      j["graph"] = file_text;
      report.emit(j, timing);
    }
  } catch (const gsc::Error& e) {
    std::cerr << "gsc: " << e.what() << '\n';
    return e.kind() == gsc::Error::Kind::Budget ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "gsc: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
