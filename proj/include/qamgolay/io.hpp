#pragma once

#include <string>

#include <json.hpp>

#include "qamgolay/constructions.hpp"
#include "qamgolay/sampling.hpp"
#include "qamgolay/sequence.hpp"

namespace qamgolay {

using Json = nlohmann::json;

// JSON shapes (keys are sorted by the library, so output is byte stable):
//   GBF       {"m": int, "terms": [{"vars": [int..], "coeff": 0..3}, ..]}
//   V-GBF     {"q": int, "m": int, "components": [GBF..]}
//   sequence  {"q": int, "m": int, "values": [[re, im], ..]}  (y ascending)
//   array     sequence plus "index_order": "x1_lsb"
//   pair      {"f": sequence, "g": sequence, "q", "m", "spec"?: spec}
//   spec      {"theorem": 1|2, "q", "factorization": [..], "d_choices": {..},
//              "omegas": [..], "nsgip": {..}|null, "case": "a"|"b"|null,
//              "upsilons": [..], "pi": [..], "base_c": [..],
//              "base_c_prime": 0..3, "mu_side": "first"|"last"}

Json gbf_to_json(const Gbf& f);
Gbf gbf_from_json(const Json& j);

Json vgbf_to_json(const VGbf& f);
VGbf vgbf_from_json(const Json& j);

Json sequence_to_json(const QamSequence& s, int m);
QamSequence sequence_from_json(const Json& j);

Json array_to_json(const QamArray& a);
QamArray array_from_json(const Json& j);

Json spec_to_json(const SpecVariant& spec);
SpecVariant spec_from_json(const Json& j);

Json pair_to_json(const VGbf& f, const VGbf& g, const Json* spec = nullptr);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Parse errors carry the offending field name.
Json parse_json_file(const std::string& path);

} // namespace qamgolay
