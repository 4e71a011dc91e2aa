// json_io.hpp — JSON formats for matrices, states, channels, POVMs,
// ensembles, and reports; floats serialize with 17 significant digits so
// files round-trip exactly and regeneration is byte-identical
#pragma once

#include "qei/holevo.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace qei {

using Json = nlohmann::json;

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
HermitianOperator hermitian_from_json(const Json& j);

Json state_to_json(const MultipartiteState& s);
MultipartiteState state_from_json(const Json& j);

Json channel_to_json(const KrausChannel& c);
KrausChannel channel_from_json(const Json& j);

Json povm_to_json(const Povm& p);
Povm povm_from_json(const Json& j);

Json ensemble_to_json(const Ensemble& e);
Ensemble ensemble_from_json(const Json& j);

Json verdict_to_json(const VerdictReport& v);
Json residual_to_json(const ResidualReport& r);
Json info_to_json(const InfoReport& r);

// Deterministic dump: sorted keys (nlohmann default) and %.17g doubles.
std::string dump_json(const Json& j, int indent = 2);

void write_json_file(const std::filesystem::path& path, const Json& j);
Json read_json_file(const std::filesystem::path& path); // throws ParseError

} // namespace qei
