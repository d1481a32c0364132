#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "young/problem.hpp"

namespace young {

/// A problem file: {"function", "a", "b", "c"?, "methods"?, "options"?}.
/// Reals may be given as numbers or as constant expressions ("1/2", "inf").
struct ProblemFile {
  ProblemInstance instance;
  std::vector<std::string> methods;
};

ProblemFile load_problem_text(const std::string& json_text);
ProblemFile load_problem_file(const std::filesystem::path& path);
ProblemInstance load_problem(const std::filesystem::path& path);

}  // namespace young
