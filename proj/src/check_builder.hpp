#pragma once

#include "mixcat/report.hpp"

#include <functional>
#include <string>

namespace mixcat::detail {

/// Accumulates instances of one named check; keeps the first failure.
class CheckBuilder {
public:
    explicit CheckBuilder(std::string name) { check_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& where, const Mor& witness) {
        ++instances_;
        if (ok || !check_.passed) return;
        check_.passed = false;
        check_.detail = "fails at " + where();
        check_.counterexample = witness;
    }

    Check finish() {
        if (check_.passed) check_.detail = std::to_string(instances_) + " instances";
        return std::move(check_);
    }

private:
    Check check_;
    std::size_t instances_ = 0;
};

}  // namespace mixcat::detail
