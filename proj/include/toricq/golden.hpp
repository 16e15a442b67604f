#pragma once
#include <functional>
#include <string>
#include <vector>

namespace tq {

struct GoldenCase {
    std::string label;
    std::string what;
    std::function<bool(std::string& note)> check;
};

std::vector<GoldenCase> golden_cases();

} // namespace tq
