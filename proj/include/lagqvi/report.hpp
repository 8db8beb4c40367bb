// One-shot verification pipeline behind `lagqvi report`: solve, persist,
// reload, residuals, policy extraction, policy/trivial Monte Carlo, DPP spot
// checks, moduli, and a pass/fail verdict assembled from the re-read files.
#pragma once

#include "lagqvi/io.hpp"

namespace lagqvi {

struct ReportCheck {
    std::string name;
    bool pass = false;
    Real value = 0;
    Real threshold = 0;
};

struct ReportResult {
    std::vector<ReportCheck> checks;
    bool hypotheses_pass = true;
    bool pass() const;
    Json to_json_doc() const;
};

// Writes all artifacts under cfg.output_dir and returns the verdict. Verdict
// inputs come from the persisted files, not the in-memory solve.
ReportResult run_report(const RunConfig& cfg);

}  // namespace lagqvi
