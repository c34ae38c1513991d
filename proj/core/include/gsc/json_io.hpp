#ifndef GSC_JSON_IO_HPP_
#define GSC_JSON_IO_HPP_

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include "gsc/cancellation.hpp"
#include "gsc/dehn.hpp"
#include "gsc/geometry.hpp"
#include "gsc/labelled_graph.hpp"
#include "gsc/presentation.hpp"

namespace gsc {

// Insertion-ordered JSON keeps reports byte-identical across runs.
using Json = nlohmann::ordered_json;

Json certificate_json(const Certificate& c, const LabelledGraph& g);
Json presentation_json(const Presentation& p);
Json verdict_json(const WpResult& r, const LabelledGraph& g);
Json filling_json(const FillingCertificate& c, const LabelledGraph& g);
FillingCertificate filling_from_json(const Json& j, const LabelledGraph& g);
Json ball_json(const CayleyBall& b, const LabelledGraph& g);
Json relation_check_json(const RelationCheck& r, const LabelledGraph& g);
Json embedding_check_json(const EmbeddingCheck& e);

}  // namespace gsc

#endif  // GSC_JSON_IO_HPP_
