#pragma once

#include "mixcat/category.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mixcat {

struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
    std::optional<Mor> counterexample;
};

struct ValidationReport {
    Model model;
    std::size_t max_rank = 0;
    std::vector<Check> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

}  // namespace mixcat
