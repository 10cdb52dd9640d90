#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "feq/errors.hpp"
#include "feq/families.hpp"
#include "feq/measures.hpp"
#include "feq/solvers.hpp"

namespace feq::app {

/// Malformed or inconsistent configuration. The message names the line and
/// column for syntax errors, or the JSON path of the offending field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class Equation { Sincos, Dalem1, Fech, WilsonModified, Gajda, Dalembert };
enum class Task { Enumerate, Solve, Verify, Factorize };

std::string to_string(Equation e);
std::string to_string(Task t);

/// A family given in the config file, either as explicit functions keyed by
/// slot name (f, k, f1, f2, g, h, F1, F2) or, for dalem1, as a theorem case
/// with parameters.
struct ExplicitFamily {
  std::string name;
  std::map<std::string, Function> functions;
  std::optional<Theorem> theorem;
  int case_number = 0;
  SolutionParams params;
};

struct Config {
  GroupSpec group;
  std::optional<Measure> measure;
  Equation equation = Equation::Fech;
  std::vector<Task> tasks;
  /// nullopt means every character of a finite group.
  std::optional<std::vector<Exponential>> exponentials;
  FechFreeParams fech;
  Complex alpha{1.0, 0.0};
  std::vector<ExplicitFamily> families;
  double tolerance = kDefaultTolerance;
  int window = kDefaultWindow;

  bool has_task(Task t) const;
};

Config parse_config(const std::string& text);
Config load_config(const std::filesystem::path& path);

}  // namespace feq::app
