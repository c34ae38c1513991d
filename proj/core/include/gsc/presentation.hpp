#ifndef GSC_PRESENTATION_HPP_
#define GSC_PRESENTATION_HPP_

#include <string>
#include <vector>

#include "gsc/cancellation.hpp"
#include "gsc/labelled_graph.hpp"
#include "gsc/word.hpp"

namespace gsc {

enum class InfiniteStatus { GuaranteedInfinite, CriterionNotMet, NotApplicable };

// Group presentation read off a standard family of cycles.
struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;  // cyclically reduced, one per family cycle
  // Vertex at which each reduced relator closes up (cyclic reduction moves
  // the basepoint along the common tree prefix).
  std::vector<VertexId> relator_bases;
  CycleFamily origin;
  int rank_pi1 = 0;
  int generator_count = 0;
  InfiniteStatus infinite = InfiniteStatus::NotApplicable;
  std::vector<std::string> warnings;
};

// Relators are the free-then-cyclic reductions of the family's cycle words.
// Empty relators are dropped with a warning (cannot happen for a standard
// family on a folded graph).
Presentation make_presentation(const LabelledGraph& g, const CycleFamily& fam);

// Guaranteed infinite iff the certificate passed and rank(pi_1) > m
// (Euler characteristic argument). Not applicable without a certificate.
InfiniteStatus infiniteness_criterion(const Certificate& cert,
                                      const Presentation& p);

// "<a,b,c | bA, cA>"
std::string render_text(const Presentation& p);

const char* infinite_status_label(InfiniteStatus s);  // guaranteed/unknown/n-a

}  // namespace gsc

#endif  // GSC_PRESENTATION_HPP_
