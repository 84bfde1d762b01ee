#include "seqrecon/serialize.hpp"

#include <sstream>

namespace seqrecon {

void to_json(json& j, const Word& w) { j = w.str(); }

void to_json(json& j, const WordSet& s) { j = s.strings(); }

void to_json(json& j, const ExtremalPair& p) {
  j = json{{"x", p.x},
           {"y", p.y},
           {"claimed_d", p.claimed_distance},
           {"formula", to_string(p.formula)}};
  if (p.k != 0) j["k"] = p.k;
}

void to_json(json& j, const FormulaValue& v) {
  j = json{{"formula", to_string(v.id)}, {"q", v.point.q}, {"n", v.point.n},
           {"t", v.point.t},             {"d", v.point.d}, {"value", v.value}};
}

void to_json(json& j, const SearchSpec& s) {
  j = json{{"q", s.q},
           {"n", s.n},
           {"k", s.k},
           {"t", s.t},
           {"d", s.d},
           {"symmetry_reduction", s.symmetry_reduction},
           {"witness_cap", s.witness_cap},
           {"budget", s.budget}};
}

void to_json(json& j, const Witness& w) {
  j = json{{"x", w.x}, {"y", w.y}, {"size", w.size}};
}

void to_json(json& j, const SearchReport& r) {
  j = json{{"spec", r.spec},
           {"maximum", r.maximum},
           {"witness_count", r.witness_count},
           {"witnesses", r.witnesses},
           {"pairs_examined", r.pairs_examined},
           {"pairs_scored", r.pairs_scored},
           {"classes_examined", r.classes_examined},
           {"elapsed_ms", r.elapsed_ms}};
}

void to_json(json& j, const Code& c) {
  j = json{{"q", c.q},
           {"n", c.n},
           {"d_min", c.d_min},
           {"size", c.codewords.size()},
           {"codewords", c.codewords}};
}

void to_json(json& j, const ChannelRequirement& r) {
  j = json{{"max_intersection", r.max_intersection},
           {"channels", r.channels},
           {"source", r.source}};
}

void to_json(json& j, const ReconstructionOutcome& o) {
  j = json{{"verdict", to_string(o.verdict)}, {"candidates", o.candidates}};
}

void to_json(json& j, const SimulationReport& r) {
  j = json{{"params",
            {{"q", r.q}, {"n", r.n}, {"t", r.t}, {"d_min", r.d_min}, {"seed", r.seed}}},
           {"trials", r.trials},
           {"unique", r.unique},
           {"ambiguous", r.ambiguous},
           {"inconsistent", r.inconsistent},
           {"threshold", r.threshold},
           {"channels", r.channels},
           {"threshold_source", r.threshold_source},
           {"code_size", r.code_size},
           {"eligible_codewords", r.eligible_codewords},
           {"ambiguity_witness", nullptr}};
  if (r.ambiguity_witness) {
    const AmbiguityWitness& w = *r.ambiguity_witness;
    j["ambiguity_witness"] =
        json{{"first", w.first}, {"second", w.second}, {"outputs", w.outputs}};
  }
}

void to_json(json& j, const SharpnessReport& r) {
  j = json{{"threshold", r.threshold},
           {"code_size", r.code_size},
           {"codewords_checked", r.codewords_checked},
           {"subsets_checked", r.subsets_checked},
           {"failures", r.failures},
           {"max_pair_intersection", r.max_pair_intersection}};
}

void to_json(json& j, const VerificationRecord& r) {
  j = json{{"claim", r.claim},
           {"params",
            {{"q", r.params.q}, {"n", r.params.n}, {"t", r.params.t}, {"d", r.params.d}}},
           {"relation", to_string(r.relation)},
           {"expected", r.expected},
           {"observed", r.observed},
           {"pass", r.pass},
           {"detail", r.detail}};
}

json error_json(ErrorCode code, const std::string& message) {
  return json{{"error", {{"reason", to_string(code)}, {"message", message}}}};
}

std::string to_lines(const WordSet& s) {
  std::string out;
  for (const Word& w : s) {
    out += w.str();
    out += '\n';
  }
  return out;
}

std::string formula_table_csv(const std::vector<FormulaValue>& rows) {
  std::ostringstream out;
  out << "n,t,value,formula\n";
  for (const auto& r : rows) {
    out << r.point.n << ',' << r.point.t << ',' << r.value << ','
        << to_string(r.id) << '\n';
  }
  return out.str();
}

json formula_table_json(const std::vector<FormulaValue>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back(json{{"n", r.point.n},
                       {"t", r.point.t},
                       {"value", r.value},
                       {"formula", to_string(r.id)}});
  }
  return out;
}

std::string search_csv_header() {
  return "q,n,k,t,d,maximum,witness_count,pairs_examined,elapsed_ms\n";
}

std::string search_csv_row(const SearchReport& r) {
  std::ostringstream out;
  out << r.spec.q << ',' << r.spec.n << ',' << r.spec.k << ',' << r.spec.t
      << ',' << r.spec.d << ',' << r.maximum << ',' << r.witness_count << ','
      << r.pairs_examined << ',' << r.elapsed_ms << '\n';
  return out.str();
}

std::string verification_csv_header() {
  return "claim,q,n,t,d,relation,expected,observed,pass\n";
}

std::string verification_csv_row(const VerificationRecord& r) {
  std::ostringstream out;
  out << r.claim << ',' << r.params.q << ',' << r.params.n << ',' << r.params.t
      << ',' << r.params.d << ',' << to_string(r.relation) << ',' << r.expected
      << ',' << r.observed << ',' << (r.pass ? "pass" : "fail") << '\n';
  return out.str();
}

}  // namespace seqrecon
