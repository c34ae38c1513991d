#ifndef GSC_TESTS_TEST_UTIL_HPP_
#define GSC_TESTS_TEST_UTIL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gsc/json_io.hpp"
#include "gsc/labelled_graph.hpp"
#include "gsc/shapes.hpp"
#include "gsc/word.hpp"

namespace gsc::test {

std::string fixture_path(const std::string& name);
LabelledGraph load_fixture(const std::string& name);

// Independent girth oracle: enumerate every simple cycle of the multigraph
// (loops count 1, parallel pairs 2) and take the minimum length.
std::optional<int> brute_force_girth(const LabelledGraph& g);

// Exponent sum of a word under every generator -> 1; the triviality oracle
// for the a=b=c group (which is the integers).
int exponent_sum(const Word& w);

// Uniform random reduced word of exactly `len` letters.
Word random_reduced_word(const Alphabet& a, int len, SeededRng& rng);

// Random nonempty reduced word reading a closed path from `start`: a random
// non-backtracking walk closed up by a shortest path. nullopt if the reduced
// closure came out empty (caller retries).
std::optional<Word> random_closed_word(const LabelledGraph& g, VertexId start,
                                       int target_len, SeededRng& rng);

// Product of at most `factors` conjugated closed-path words, freely reduced:
// trivial in the presented group by construction.
Word random_trivial_word(const LabelledGraph& g, int factors, int conj_len,
                         SeededRng& rng);

// Minimal JSON-schema checker covering the subset used by docs/schemas:
// type, properties, required, additionalProperties (bool), items, enum.
bool validate_schema(const Json& value, const Json& schema, std::string* why);

Json load_schema(const std::string& name);

}  // namespace gsc::test

#endif  // GSC_TESTS_TEST_UTIL_HPP_
