// Documents and artifacts: the JSON problem document, run configuration,
// value-field persistence (manifest + one CSV per r-layer + v0), policy and
// schedule CSVs, and result JSONs. All numerics are written as 17
// significant-digit decimals so reruns are byte-identical.
#pragma once

#include "lagqvi/analysis.hpp"
#include "lagqvi/policy.hpp"
#include "lagqvi/simulate.hpp"

#include <filesystem>
#include <string>

#include "json.hpp"

namespace lagqvi {

using Json = nlohmann::json;

std::string fmt17(Real v);

Json to_json(const ProblemSpec& spec);
ProblemSpec problem_from_json(const Json& doc);

// FNV-1a over the canonical serialized problem document.
std::string spec_hash(const ProblemSpec& spec);

struct GridConfig {
    int n_t = 100;
    int n_x = 100;
    Real x_lo = -2;
    Real x_hi = 2;
};

struct RunConfig {
    ProblemSpec problem;
    GridConfig grid;
    McConfig mc;
    std::filesystem::path output_dir = "out";
    InfeasibleMode mode = InfeasibleMode::Strict;
};

RunConfig run_config_from_json(const Json& doc);
RunConfig load_run_config(const std::filesystem::path& path);

void write_field(const ValueField& field, const std::filesystem::path& dir);

// Loads a persisted field, checking the manifest against the requesting
// problem document; mismatch or missing files raise ArtifactError.
ValueField load_field(const std::filesystem::path& dir, const ProblemSpec& spec);

void write_policy_csv(const PolicyTable& policy, const std::filesystem::path& path);
void write_schedule_csv(const ImpulseSchedule& schedule, const std::filesystem::path& path);
ImpulseSchedule read_schedule_csv(const std::filesystem::path& path);
void write_paths_csv(const std::vector<std::vector<PathPoint>>& paths,
                     const std::filesystem::path& path);

Json to_json(const ValidationReport& report);
Json to_json(const ResidualReport& report);
Json to_json(const SimResult& result);
Json to_json(const ModuliReport& report);
void write_limit_csv(const LimitStudy& study, const std::filesystem::path& path);

void write_text(const std::filesystem::path& path, const std::string& text);
Json read_json(const std::filesystem::path& path);

}  // namespace lagqvi
