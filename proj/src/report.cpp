#include "fbk/report.hpp"

#include "fbk/word_syntax.hpp"

namespace fbk {

Json to_json(const GarsideNormalForm& nf) {
  Json factors = Json::array();
  for (const auto& f : nf.factors) factors.push_back(f.images());
  return Json{{"inf", nf.inf}, {"factors", std::move(factors)}};
}

Json to_json(const FramedBraid& b) {
  return Json{{"strands", b.strands()},
              {"lambda", b.lambda()},
              {"beta", print_word(b.beta())},
              {"word", print_word(b.spelled())},
              {"garside", to_json(to_normal_form(b.beta()))}};
}

Json to_json(const LinkSignature& sig) {
  Json components = Json::array();
  for (const auto& c : sig.components) {
    components.push_back(Json{{"strands", c.strands}, {"framing", c.framing}});
  }
  return Json{{"components", std::move(components)}, {"linking", sig.linking}};
}

Json to_json(const PlatSignature& sig) {
  Json components = Json::array();
  for (const auto& c : sig.components) {
    std::vector<std::string> dirs;
    for (auto d : c.directions) dirs.emplace_back(d == Direction::Down ? "down" : "up");
    components.push_back(
        Json{{"strands", c.strands}, {"directions", dirs}, {"framing", c.framing}});
  }
  return Json{{"components", std::move(components)}, {"abs_linking", sig.abs_linking}};
}

Json to_json(const MoveDescriptor& d) {
  Json j{{"kind", to_string(d.kind)},
         {"split", d.split},
         {"index", d.i},
         {"sign", d.sign},
         {"k", d.k},
         {"side", d.side == InclusionSide::Right ? "right" : "left"}};
  if (d.conjugator) j["conjugator"] = print_word(d.conjugator->spelled());
  if (d.inverse) j["inverse"] = true;
  return j;
}

Json to_json(const RelationReport& r) {
  Json j{{"relation_id", r.relation_id}, {"holds", r.holds}, {"skipped", r.skipped}};
  if (!r.missing.empty()) j["missing"] = r.missing;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const std::vector<RelationReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace fbk
