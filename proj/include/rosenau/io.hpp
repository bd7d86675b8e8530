#pragma once

// CSV and JSON artifacts. Numbers are written in the shortest decimal form
// that reads back to the same double, so identical runs give identical files.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "rosenau/elliptic.hpp"
#include "rosenau/petviashvili.hpp"
#include "rosenau/solver.hpp"
#include "rosenau/validation.hpp"

namespace rosenau::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

std::string format_double(double v);

// Throws IoError.
void write_text(const std::filesystem::path& path, const std::string& content);
std::string read_text(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& doc);

// Long format t,x,u.
std::string snapshots_csv(const EvolutionRecord& record);
// x,Q
std::string profile_csv(const Field& Q);
// resolution,Linf_error,observed_order
std::string convergence_csv(const ConvergenceTable& table);
// x,u,pole; u is "inf" at a tagged pole.
std::string curve_csv(const std::vector<double>& x, const std::vector<RealOrPole>& u);
// t,energy
std::string energy_csv(const EvolutionRecord& record);

// Reads an x,Q file written by profile_csv. The nodes must be uniformly
// spaced; the period is inferred as N * dx. Throws IoError or ConfigError.
Field read_profile_csv(const std::filesystem::path& path);

json to_json(const IdentitySuite& suite);
json to_json(const ConvergenceTable& table);
json to_json(const SolitaryProfile& profile);
json to_json(const CollisionReport& report);
json to_json(const EllipticCaseParams& params);
json to_json(const PropagationReport& report);

// {"schema_version": "1", ...body}
json with_schema(json body);

}  // namespace rosenau::io
