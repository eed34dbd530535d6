#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "revkit/analysis.hpp"
#include "revkit/annotation.hpp"
#include "revkit/corpus.hpp"
#include "revkit/editops.hpp"
#include "revkit/engine.hpp"

namespace revkit {

// JSON forms of the line-oriented files. Intents are lowercase names; offsets
// are code points. Conversion failures throw nlohmann::json exceptions; use
// parse_line for Error-typed diagnostics.
void to_json(nlohmann::json& j, const IntentSpan& span);
void from_json(const nlohmann::json& j, IntentSpan& span);
void to_json(nlohmann::json& j, const Edit& edit);
void from_json(const nlohmann::json& j, Edit& edit);
void to_json(nlohmann::json& j, const RevisionStep& step);
void from_json(const nlohmann::json& j, RevisionStep& step);
void to_json(nlohmann::json& j, const RevisionTrace& trace);
void from_json(const nlohmann::json& j, RevisionTrace& trace);
void to_json(nlohmann::json& j, const CorpusRecord& record);
void from_json(const nlohmann::json& j, CorpusRecord& record);
// {doc_id, text, references?, group?}
void to_json(nlohmann::json& j, const BatchInput& input);
void from_json(const nlohmann::json& j, BatchInput& input);

nlohmann::json intent_to_json(Intent intent);
Intent intent_from_json(const nlohmann::json& j);

// Parses one line; throws kParseError carrying the 1-based line number.
template <typename T>
T parse_line(std::string_view line, std::size_t line_no);

// Compact single-line form with sorted keys.
std::string to_line(const nlohmann::json& j);

// Reads up to `max_lines` non-blank lines; returns fewer only at end of input.
// `line_no` is advanced past every line consumed, blank or not.
std::vector<std::pair<std::size_t, std::string>> read_lines(std::istream& in,
                                                            std::size_t max_lines,
                                                            std::size_t& line_no);

}  // namespace revkit
