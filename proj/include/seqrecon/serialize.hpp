#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "seqrecon/claims.hpp"
#include "seqrecon/closed_forms.hpp"
#include "seqrecon/error.hpp"
#include "seqrecon/extremal.hpp"
#include "seqrecon/reconstruct.hpp"
#include "seqrecon/search.hpp"
#include "seqrecon/word.hpp"
#include "seqrecon/word_set.hpp"

namespace seqrecon {

using json = nlohmann::json;

// nlohmann ADL hooks: `json j = value;` works for each of these.
void to_json(json& j, const Word& w);
void to_json(json& j, const WordSet& s);
void to_json(json& j, const ExtremalPair& p);
void to_json(json& j, const FormulaValue& v);
void to_json(json& j, const SearchSpec& s);
void to_json(json& j, const Witness& w);
void to_json(json& j, const SearchReport& r);
void to_json(json& j, const Code& c);
void to_json(json& j, const ChannelRequirement& r);
void to_json(json& j, const ReconstructionOutcome& o);
void to_json(json& j, const SimulationReport& r);
void to_json(json& j, const SharpnessReport& r);
void to_json(json& j, const VerificationRecord& r);

// {"error": {"reason": "<code>", "message": "..."}}
json error_json(ErrorCode code, const std::string& message);

// One member per line, each followed by '\n'. The empty word is a blank line.
std::string to_lines(const WordSet& s);

// Columns n,t,value,formula.
std::string formula_table_csv(const std::vector<FormulaValue>& rows);
json formula_table_json(const std::vector<FormulaValue>& rows);

std::string search_csv_header();
std::string search_csv_row(const SearchReport& r);

std::string verification_csv_header();
std::string verification_csv_row(const VerificationRecord& r);

}  // namespace seqrecon
