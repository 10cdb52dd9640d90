#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "feq/domain.hpp"
#include "feq/functions.hpp"

namespace feq {

// Solution families of
//   F(x+y) + F(x-y) = 2 g(x) h_e(y)       (even equation)
//   H(x+y) - H(x-y) = 2 g(x) h_o(y)       (odd equation)
//   F1(x+y) + F2(x-y) = g(x) h(y)         (combined equation)
// with F = F1 + F2 and H = F1 - F2.

enum class Theorem { Even, Odd, Combined };
enum class EvenCase { I = 1, II, III, IV };
enum class OddCase { I = 1, II, III, IV, V, VI };
enum class CombinedCase { I = 1, II, III, IV, V };

inline constexpr EvenCase kEvenCases[] = {EvenCase::I, EvenCase::II, EvenCase::III, EvenCase::IV};
inline constexpr OddCase kOddCases[] = {OddCase::I, OddCase::II, OddCase::III, OddCase::IV, OddCase::V, OddCase::VI};
inline constexpr CombinedCase kCombinedCases[] = {CombinedCase::I, CombinedCase::II, CombinedCase::III,
                                                  CombinedCase::IV, CombinedCase::V};

std::string to_string(Theorem t);
std::string to_string(EvenCase c);
std::string to_string(OddCase c);
std::string to_string(CombinedCase c);
std::string roman(int n);

/// Parse "i".."vi" (case-insensitive) into a 1-based case number; 0 if unrecognized.
int parse_roman(const std::string& s);

struct SolutionParams {
  Complex alpha{};
  Complex beta{};
  Complex gamma{};
  Complex delta{};
  Complex b{};
  std::optional<Exponential> m;
  std::optional<Exponential> m0;
  std::optional<AdditiveFunction> a;
  std::optional<TwoGPeriodic> T;
  // Concrete stand-ins for the "arbitrary function" slots of a case.
  std::optional<Function> arbitrary_g;
  std::optional<Function> arbitrary_h;
};

enum class Parity { Any, Even, Odd };

/// A realized function, or a marker for an arbitrary function of given parity.
class Slot {
 public:
  Slot(Function f) : value_(std::move(f)) {}         // NOLINT(google-explicit-constructor)
  Slot(ExpPolyFunction f) : value_(std::move(f)) {}  // NOLINT(google-explicit-constructor)
  Slot(TableFunction f) : value_(std::move(f)) {}    // NOLINT(google-explicit-constructor)
  static Slot arbitrary(Parity p) { return Slot(p); }

  bool is_arbitrary() const { return !value_.has_value(); }
  Parity parity() const { return parity_; }

  /// Throws EvaluationError for an unrealized arbitrary slot.
  const Function& function() const;
  Complex operator()(const GroupElement& x) const { return function()(x); }

 private:
  explicit Slot(Parity p) : parity_(p) {}
  std::optional<Function> value_;
  Parity parity_ = Parity::Any;
};

struct EvenSolution {
  EvenCase id;
  SolutionParams params;
  Function F;
  Slot g;
  Slot h_even;
};

struct OddSolution {
  OddCase id;
  SolutionParams params;
  Function H;
  Slot g;
  Slot h_odd;
};

struct CombinedSolution {
  CombinedCase id;
  SolutionParams params;
  Function F1;
  Function F2;
  Slot g;
  Slot h;
};

/// Theorem-agnostic view used for reporting.
struct SolutionFamily {
  Theorem theorem;
  int case_number;
  SolutionParams params;
  std::vector<std::pair<std::string, Slot>> functions;
};

SolutionFamily to_family(const EvenSolution& s);
SolutionFamily to_family(const OddSolution& s);
SolutionFamily to_family(const CombinedSolution& s);

struct FamilyOptions {
  double tol = kDefaultTolerance;
  /// Half-width used when checking parity of arbitrary realizations on infinite groups.
  int window = kDefaultWindow;
  /// Accept a = 0 in combined cases (ii)/(iii); set by the pairing for its degenerate outputs.
  bool allow_degenerate = false;
};

/// Constraints are checked up front; violations throw ParameterError.
EvenSolution build_even_case(EvenCase id, const SolutionParams& p, const GroupSpec& g, const FamilyOptions& opt = {});
OddSolution build_odd_case(OddCase id, const SolutionParams& p, const GroupSpec& g, const FamilyOptions& opt = {});
CombinedSolution build_combined_case(CombinedCase id, const SolutionParams& p, const GroupSpec& g,
                                     const FamilyOptions& opt = {});

/// (F1, F2) -> (F1 + F2, F1 - F2).
std::pair<Function, Function> split_FH(const Function& F1, const Function& F2);
/// (F, H) -> ((F + H)/2, (F - H)/2).
std::pair<Function, Function> compose_FH(const Function& F, const Function& H);

// ------------------------------------------------------------------ pairing

/// Case-level outcome of combining an even case with an odd case: the
/// combined case it yields, or nullopt if the pairing is impossible.
struct PairingRule {
  std::optional<CombinedCase> combined;
  std::string note;
};

PairingRule classify_pairing(EvenCase even, OddCase odd);

struct PairedCase {
  CombinedCase id;
  SolutionParams params;
  /// Parameters outside the combined case's strict constraints (e.g. a = 0).
  bool degenerate = false;
  std::string note;
};

struct Incompatible {
  std::string reason;
};

using PairingResult = std::variant<PairedCase, Incompatible>;

/// Pairs concrete even/odd parameters. Both g forms must coincide; the
/// m <-> m-check symmetry is resolved by moving both sides to the canonical
/// orientation of m.
PairingResult pair_cases(EvenCase even, OddCase odd, const SolutionParams& even_params,
                         const SolutionParams& odd_params, const GroupSpec& g, const FamilyOptions& opt = {});

CombinedSolution realize(const PairedCase& paired, const GroupSpec& g, const FamilyOptions& opt = {});

}  // namespace feq
