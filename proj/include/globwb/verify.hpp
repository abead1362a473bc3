#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace globwb {

struct VerifyOptions {
    std::size_t max_vertices = 10;    // criteria 6, 7, 10
    int max_dim = 4;                  // criteria 6, 7, 10
    std::size_t count_vertices = 12;  // criterion 5
    std::size_t samples = 1000;       // criteria 8, 9
    std::uint64_t seed = 20240611;
};

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    bool within_budget = true;
    double seconds = 0;
    double budget = 0;
    std::size_t cases = 0;
    std::string detail;
    nlohmann::json counterexample;
};

int criterion_count();
CheckResult run_criterion(int id, const VerifyOptions& opt);
std::vector<CheckResult> run_all(const VerifyOptions& opt);

std::string format_line(const CheckResult& r);
nlohmann::json to_json(const CheckResult& r);

}  // namespace globwb
