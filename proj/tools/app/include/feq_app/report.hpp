#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "feq/verifier.hpp"
#include "feq_app/config.hpp"

namespace feq::app {

struct FactorizationInfo {
  bool rank1 = false;
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  double reconstruction_error = 0.0;
};

enum class Status { Pass, Fail, NotVerified, Unverifiable };

std::string to_string(Status s);

struct FamilyReport {
  std::string name;
  std::string theorem;
  std::string case_id;
  std::string kind;
  nlohmann::json params = nlohmann::json::object();
  std::optional<Residual> residual;
  Status status = Status::NotVerified;
  std::string note;
  bool near_threshold = false;
  std::optional<FactorizationInfo> factorization;
};

struct CharacterReport {
  Exponential m;
  std::optional<Complex> mu_hat;
};

struct SkippedReport {
  Exponential m;
  std::string reason;
  double mu_hat_abs = 0.0;
};

struct Report {
  Equation equation = Equation::Fech;
  GroupSpec group;
  double tolerance = kDefaultTolerance;
  int window = kDefaultWindow;
  std::optional<Measure> measure;
  std::vector<CharacterReport> characters;
  std::vector<FamilyReport> families;
  std::vector<SkippedReport> skipped;
  bool all_pass = true;
  double timing_ms = 0.0;
};

nlohmann::json to_json(const Report& r);
/// Fixed-width table for the terminal.
std::string render_table(const Report& r);

// Serialization of the value types, shared with the config reader.
nlohmann::json complex_json(Complex c);
nlohmann::json to_json(const GroupSpec& g);
nlohmann::json to_json(const GroupElement& x);
nlohmann::json to_json(const Exponential& m);
nlohmann::json to_json(const AdditiveFunction& a);
nlohmann::json to_json(const TwoGPeriodic& T);
nlohmann::json to_json(const Measure& mu);
nlohmann::json to_json(const SolutionParams& p);

}  // namespace feq::app
