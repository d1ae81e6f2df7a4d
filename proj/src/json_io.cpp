#include "screenparse/json_io.hpp"

#include <map>
#include <stdexcept>

namespace screenparse {

using nlohmann::json;

namespace {

json span_json(const Span& s) { return json::array({s.first, s.second}); }

Span span_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("span must be [first, last]");
  return {j.at(0).get<std::size_t>(), j.at(1).get<std::size_t>()};
}

}  // namespace

json to_json(const UtteranceAnalysis& a) {
  json j;
  j["tokens"] = json::array();
  for (const auto& t : a.tokens)
    j["tokens"].push_back(
        {{"pos", t.position}, {"surface", t.surface}, {"kind", std::string(to_string(t.kind))}});
  j["surviving"] = a.surviving;
  j["tagged"] = json::array();
  for (const auto& w : a.tagged)
    j["tagged"].push_back({{"pos", w.position()},
                           {"basic", w.basic},
                           {"basic_act", w.basic_activations},
                           {"abstract", w.abstract_},
                           {"abstract_act", w.abstract_activations},
                           {"start", w.phrase_start},
                           {"start_act", w.start_activation}});
  j["groups"] = json::array();
  for (const auto& g : a.groups) {
    json words = json::array();
    for (const auto& w : g.words) words.push_back(w.position());
    j["groups"].push_back({{"label", g.abstract_},
                           {"span", span_json(g.span)},
                           {"lexical_start", g.lexical_start},
                           {"words", words}});
  }
  j["repairs"] = json::array();
  for (const auto& e : a.repairs)
    j["repairs"].push_back({{"kind", std::string(to_string(e.kind))},
                            {"removed", span_json(e.removed_span)},
                            {"kept", e.kept_span ? span_json(*e.kept_span) : json(nullptr)},
                            {"evidence", e.evidence}});
  j["frames"] = json::array();
  for (const auto& f : a.frames) {
    json slots = json::array();
    for (const auto& s : f.slots)
      slots.push_back({{"key", s.key}, {"group", s.group}, {"incompatible", s.incompatible}});
    j["frames"].push_back({{"index", f.index},
                           {"verb", f.verb_group ? json(*f.verb_group) : json(nullptr)},
                           {"slots", slots}});
  }
  return j;
}

UtteranceAnalysis analysis_from_json(const json& j) {
  UtteranceAnalysis a;
  for (const auto& t : j.at("tokens")) {
    Token tok(t.at("surface").get<std::string>(), t.at("pos").get<std::size_t>());
    tok.kind = token_kind_from_string(t.at("kind").get<std::string>());
    a.tokens.push_back(std::move(tok));
  }
  a.surviving = j.at("surviving").get<std::vector<std::size_t>>();

  std::map<std::size_t, const Token*> by_pos;
  for (const auto& t : a.tokens) by_pos[t.position] = &t;
  auto token_at = [&](std::size_t pos) -> const Token& {
    auto it = by_pos.find(pos);
    if (it == by_pos.end()) throw std::invalid_argument("reference to unknown position");
    return *it->second;
  };

  std::map<std::size_t, std::size_t> tagged_index;
  for (const auto& w : j.at("tagged")) {
    TaggedWord word;
    word.token = token_at(w.at("pos").get<std::size_t>());
    word.basic = w.at("basic").get<std::string>();
    word.basic_activations = w.at("basic_act").get<std::vector<double>>();
    word.abstract_ = w.at("abstract").get<std::string>();
    word.abstract_activations = w.at("abstract_act").get<std::vector<double>>();
    word.phrase_start = w.at("start").get<bool>();
    word.start_activation = w.at("start_act").get<double>();
    tagged_index[word.position()] = a.tagged.size();
    a.tagged.push_back(std::move(word));
  }

  for (const auto& g : j.at("groups")) {
    PhraseGroup group;
    for (const auto& p : g.at("words")) {
      auto it = tagged_index.find(p.get<std::size_t>());
      if (it == tagged_index.end()) throw std::invalid_argument("group word is not tagged");
      group.words.push_back(a.tagged[it->second]);
    }
    if (group.words.empty()) throw std::invalid_argument("empty group");
    group.abstract_ = g.at("label").get<std::string>();
    group.span = span_from(g.at("span"));
    group.lexical_start = g.at("lexical_start").get<std::string>();
    a.groups.push_back(std::move(group));
  }

  for (const auto& e : j.at("repairs")) {
    RepairEvent event;
    event.kind = repair_kind_from_string(e.at("kind").get<std::string>());
    event.removed_span = span_from(e.at("removed"));
    if (!e.at("kept").is_null()) event.kept_span = span_from(e.at("kept"));
    event.evidence = e.at("evidence").get<std::vector<std::string>>();
    a.repairs.push_back(std::move(event));
  }

  for (const auto& f : j.at("frames")) {
    Frame frame;
    frame.index = f.at("index").get<std::size_t>();
    if (!f.at("verb").is_null()) frame.verb_group = f.at("verb").get<std::size_t>();
    for (const auto& s : f.at("slots"))
      frame.slots.push_back(SlotFill{s.at("key").get<std::string>(),
                                     s.at("group").get<std::size_t>(),
                                     s.at("incompatible").get<bool>()});
    a.frames.push_back(std::move(frame));
  }
  return a;
}

}  // namespace screenparse
