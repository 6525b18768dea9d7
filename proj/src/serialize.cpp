#include "pathrw/serialize.hpp"

#include <json.hpp>

#include "pathrw/script.hpp"

namespace pathrw {

using nlohmann::json;

namespace {

json context_json(const Context& ctx) {
  json elements = json::array();
  for (const auto& name : ctx.element_names()) {
    json e{{"name", name}, {"type", ctx.element_type(name)}};
    if (auto it = ctx.lambda_elements().find(name); it != ctx.lambda_elements().end()) {
      e["value"] = it->second.to_string();
    }
    elements.push_back(std::move(e));
  }
  json atoms = json::array();
  for (const auto& a : ctx.atoms()) {
    atoms.push_back({{"name", a.name},
                     {"source", a.source},
                     {"target", a.target},
                     {"type", a.type},
                     {"tag", std::string(to_string(a.tag))}});
  }
  return {{"types", ctx.types()}, {"elements", elements}, {"atoms", atoms}};
}

Context context_from(const json& j) {
  Context ctx;
  for (const auto& t : j.at("types")) ctx.add_type(t.get<std::string>());
  for (const auto& e : j.at("elements")) {
    auto name = e.at("name").get<std::string>();
    auto type = e.at("type").get<std::string>();
    if (e.contains("value")) {
      ctx.add_lambda(name, parse_lambda(e.at("value").get<std::string>(), ctx), type);
    } else {
      ctx.add_element(name, type);
    }
  }
  for (const auto& a : j.at("atoms")) {
    ctx.add_atom(AtomDecl{a.at("name").get<std::string>(), a.at("source").get<std::string>(),
                          a.at("target").get<std::string>(), a.at("type").get<std::string>(),
                          axiom_tag_from_string(a.at("tag").get<std::string>())});
  }
  return ctx;
}

}  // namespace

std::string derivation_document(const Derivation& d, const Context& ctx, const std::string& rules) {
  json steps = json::array();
  for (const auto& s : d.steps) {
    steps.push_back({{"rule", s.rule},
                     {"position", s.position},
                     {"direction", s.direction == Direction::Forward ? "forward" : "reverse"},
                     {"before", to_string(s.before)},
                     {"after", to_string(s.after)}});
  }
  json doc{{"format", "pathrw-derivation/1"},
           {"context", context_json(ctx)},
           {"rules", rules},
           {"level", d.level},
           {"start", to_string(d.start)},
           {"end", to_string(d.end())},
           {"steps", steps}};
  return doc.dump(2);
}

ReplayOutcome replay_document(std::string_view json_text) {
  ReplayOutcome out;
  try {
    json doc = json::parse(json_text);
    if (doc.value("format", "") != "pathrw-derivation/1") {
      out.message = "not a pathrw derivation document";
      return out;
    }
    Context ctx = context_from(doc.at("context"));
    const RuleSet& rs = RuleSet::by_name(doc.at("rules").get<std::string>());
    Derivation d{parse_path(doc.at("start").get<std::string>(), ctx), {}, doc.at("level").get<std::size_t>()};
    for (const auto& s : doc.at("steps")) {
      auto dir = s.at("direction").get<std::string>();
      if (dir != "forward" && dir != "reverse") throw std::invalid_argument("bad direction '" + dir + "'");
      d.steps.push_back(RewriteStep{s.at("rule").get<std::string>(), s.at("position").get<Position>(),
                                    dir == "forward" ? Direction::Forward : Direction::Reverse,
                                    parse_path(s.at("before").get<std::string>(), ctx),
                                    parse_path(s.at("after").get<std::string>(), ctx), d.level});
    }
    PathTerm end = parse_path(doc.at("end").get<std::string>(), ctx);
    if (!replay_derivation(d, rs, ctx)) {
      out.message = "derivation does not replay";
    } else if (!(d.end() == end)) {
      out.message = "derivation does not end at the recorded end term";
    } else {
      out.ok = true;
      out.message = "replayed " + std::to_string(d.steps.size()) + " steps";
    }
    out.derivation = std::move(d);
  } catch (const std::exception& e) {
    out.message = e.what();
  }
  return out;
}

}  // namespace pathrw
