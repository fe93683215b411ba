#pragma once

// JSON views of the library's results. Key order is fixed so that output is
// byte-stable and diffable.

#include <string>
#include <vector>

#include <json.hpp>

#include "fbk/closure.hpp"
#include "fbk/framed.hpp"
#include "fbk/garside.hpp"
#include "fbk/hilden.hpp"
#include "fbk/moves.hpp"
#include "fbk/plat.hpp"

namespace fbk {

using Json = nlohmann::ordered_json;

Json to_json(const GarsideNormalForm& nf);
// {strands, lambda, beta, word, garside}
Json to_json(const FramedBraid& b);
// {components:[{strands, framing}], linking}
Json to_json(const LinkSignature& sig);
// {components:[{strands, directions, framing}], abs_linking}
Json to_json(const PlatSignature& sig);
Json to_json(const MoveDescriptor& d);
// {relation_id, holds, skipped} plus missing / note when present.
Json to_json(const RelationReport& r);
Json to_json(const std::vector<RelationReport>& reports);

std::string dump(const Json& j, bool pretty);

}  // namespace fbk
