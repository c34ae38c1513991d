#include "gsc/presentation.hpp"

#include <sstream>

#include "gsc/error.hpp"

namespace gsc {

Presentation make_presentation(const LabelledGraph& g,
                               const CycleFamily& fam) {
  if (!g.folded())
    throw Error::precondition("make_presentation: graph is not folded");

  Presentation p;
  p.alphabet = g.alphabet();
  p.origin = fam;
  p.generator_count = g.alphabet().size();
  p.rank_pi1 = rank(g);

  for (std::size_t i = 0; i < fam.cycle_words.size(); ++i) {
    CyclicReduction cr = cyclic_reduce(fam.cycle_words[i]);
    if (cr.core.empty()) {
      p.warnings.push_back("cycle " + std::to_string(i) +
                           " reduces to the empty word; relator dropped");
      continue;
    }
    // The core closes up where the conjugator ends.
    auto prefix = walk(g, fam.base, cr.conjugator);
    VertexId base = fam.base;
    if (prefix && !prefix->empty()) base = g.dart(prefix->back()).target;
    p.relators.push_back(std::move(cr.core));
    p.relator_bases.push_back(base);
  }
  return p;
}

InfiniteStatus infiniteness_criterion(const Certificate& cert,
                                      const Presentation& p) {
  if (!cert.pass) return InfiniteStatus::NotApplicable;
  return p.rank_pi1 > p.generator_count ? InfiniteStatus::GuaranteedInfinite
                                        : InfiniteStatus::CriterionNotMet;
}

std::string render_text(const Presentation& p) {
  std::ostringstream out;
  out << '<';
  for (int i = 0; i < p.alphabet.size(); ++i) {
    if (i) out << ',';
    out << p.alphabet.generator_name(i);
  }
  out << " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) out << ", ";
    out << word_text(p.relators[i], p.alphabet);
  }
  out << '>';
  return out.str();
}

const char* infinite_status_label(InfiniteStatus s) {
  switch (s) {
    case InfiniteStatus::GuaranteedInfinite:
      return "guaranteed";
    case InfiniteStatus::CriterionNotMet:
      return "unknown";
    case InfiniteStatus::NotApplicable:
      return "n/a";
  }
  return "n/a";
}

}  // namespace gsc
