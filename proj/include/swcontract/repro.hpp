#pragma once

// Recomputes every quantitative claim of the source benchmarks from the
// shipped models and reports match/mismatch per row. Mismatch rows carry a
// note explaining the recomputed value; the report never fails the process.

#include <string>
#include <vector>

#include <json.hpp>

namespace swc {

struct ReproRow {
    std::string id;
    double paper_value = 0.0;
    double computed_value = 0.0;
    double tolerance = 0.0;
    std::string status;  // match | mismatch | informational
    std::string note;
};

std::vector<ReproRow> repro_rows();

nlohmann::ordered_json repro_to_json(const std::vector<ReproRow>& rows);
std::string repro_to_text(const std::vector<ReproRow>& rows);

}  // namespace swc
