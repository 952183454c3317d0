#include "noc/json_io.hpp"

namespace noc {
namespace {

Json words_array(const std::vector<Word>& words, int q) {
    Json arr = Json::array();
    for (const Word& w : words) arr.push_back(to_string(w, q));
    return arr;
}

const char* kind_name(WitnessKind kind) {
    switch (kind) {
    case WitnessKind::PrefixSuffixOverlap: return "prefix_suffix_overlap";
    case WitnessKind::SubwordContainment: return "subword_containment";
    case WitnessKind::PrefixOfAnother: return "prefix_of_another";
    }
    return "unknown";
}

} // namespace

Json to_json(const SearchResult& result) {
    Json j;
    j["n"] = result.n;
    j["q"] = result.q;
    j["cardinality"] = result.cardinality;
    j["code"] = words_array(result.code.words(), result.q);
    j["nodes_expanded"] = result.nodes_expanded;
    j["elapsed_ms"] = result.elapsed_ms;
    return j;
}

Json to_json(const Witness& witness, int q) {
    Json j;
    j["kind"] = kind_name(witness.kind);
    j["u"] = to_string(witness.u, q);
    j["v"] = to_string(witness.v, q);
    j["evidence"] = to_string(witness.evidence, q);
    j["offset"] = witness.offset;
    j["description"] = witness.describe(q);
    return j;
}

Json to_json(const BoundReport& report) {
    Json j;
    j["n"] = report.n;
    j["q"] = report.q;
    j["levenshtein"] = to_fraction_string(report.levenshtein_value);
    j["levenshtein_floor"] = report.levenshtein_floor.str();
    j["classic_lower"] = report.classic_lower.str();
    if (report.exact_max) j["exact_max"] = report.exact_max->str();
    if (report.trivial_sum) {
        j["trivial_sum"] = report.trivial_sum->str();
        j["trivial_m"] = report.trivial_m;
        j["trivial_source"] =
            report.trivial_source == BoundSource::Exact ? "exact" : "levenshtein_floor";
    }
    return j;
}

Json to_json(const LengthReport& report) {
    Json j;
    j["size"] = report.code_size.str();
    j["q"] = report.q;
    j["avg_length"] = to_fraction_string(report.avg_length);
    j["entropy_floor"] = report.entropy_floor;
    j["n"] = report.n;
    j["bracket_low"] = report.bracket_low;
    j["trend_holds"] = report.trend_holds;
    return j;
}

Json verify_report_json(const Code& S, const std::optional<Witness>& witness) {
    Json j;
    j["status"] = witness ? "overlapping" : "non-overlapping";
    j["size"] = S.size();
    j["q"] = S.q();
    j["prefix_code"] = is_prefix_code(S);
    if (witness) j["witness"] = to_json(*witness, S.q());
    return j;
}

} // namespace noc
