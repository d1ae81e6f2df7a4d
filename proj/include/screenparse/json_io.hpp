#ifndef SCREENPARSE_JSON_IO_HPP_
#define SCREENPARSE_JSON_IO_HPP_

#include "json.hpp"

#include "screenparse/caseframe.hpp"

namespace screenparse {

/// JSON-lines record for one utterance:
///
///   tokens    [{pos, surface, kind}]
///   surviving [pos...]
///   tagged    [{pos, basic, basic_act[], abstract, abstract_act[], start, start_act}]
///   groups    [{label, span[2], lexical_start, words[pos...]}]
///   repairs   [{kind, removed[2], kept[2]|null, evidence[]}]
///   frames    [{index, verb|null, slots[{key, group, incompatible}]}]
///
/// Group words and tagged entries refer back to tokens by position.
nlohmann::json to_json(const UtteranceAnalysis& analysis);
/// Inverse of to_json. Throws nlohmann::json::exception or
/// std::invalid_argument on schema violations.
UtteranceAnalysis analysis_from_json(const nlohmann::json& j);

}  // namespace screenparse

#endif  // SCREENPARSE_JSON_IO_HPP_
