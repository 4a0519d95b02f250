#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "radhom/dims.hpp"

namespace radhom {

/// Proved statements fail as engine bugs; the open question yields candidates.
enum class Verdict { Pass, PassAtBound, Inconclusive, Fail, CounterexampleCandidate };
const char* verdict_name(Verdict v);

struct VerdictReport {
  std::string fingerprint;
  std::string check;
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
  nlohmann::json witness = nlohmann::json::object();
  int bound = 0;
  double seconds = 0;

  /// Timing is left out unless asked for, so reports compare byte for byte.
  nlohmann::json to_json(bool with_timing = false) const;
};

/// Outcome of a single comparison inside a check.
enum class Item { Ok, OkAtBound, Undecided, Violation, Candidate };

/// Folds item outcomes into a verdict and keeps the first witnesses.
class Tally {
 public:
  void add(Item it, const nlohmann::json& detail = nullptr);
  Verdict verdict() const;
  nlohmann::json summary() const;
  int count(Item it) const { return counts_[static_cast<int>(it)]; }

 private:
  int counts_[5] = {0, 0, 0, 0, 0};
  nlohmann::json violations_ = nlohmann::json::array();
  nlohmann::json undecided_ = nlohmann::json::array();
  nlohmann::json at_bound_ = nlohmann::json::array();
};

/// Equality of two dimensions under the comparability rules. ZeroModule reads as 0.
Item compare_equal(const DimValue& a, const DimValue& b);

VerdictReport check_prop22(const AlgebraPtr& a, const std::vector<Rep>& modules, int bound);
VerdictReport check_prop22(const AlgebraPtr& a, int bound);
VerdictReport check_thm_injdim_radical(const AlgebraPtr& a, int bound);
VerdictReport check_question_syzygy(const AlgebraPtr& a, int bound);
VerdictReport check_gorenstein_gpd(const AlgebraPtr& a, int bound);
VerdictReport check_ginj_radical(const AlgebraPtr& a, int bound);
VerdictReport check_domdim_suite(const AlgebraPtr& a, int bound);
VerdictReport check_koszul(const AlgebraPtr& a, int bound);

using CheckFn = std::function<VerdictReport(const AlgebraPtr&, int)>;
/// Registered checks by name, in a fixed order.
const std::vector<std::pair<std::string, CheckFn>>& check_registry();
std::optional<CheckFn> find_check(const std::string& name);
/// Default check set for sweeps.
std::vector<std::string> default_checks();

VerdictReport run_check(const std::string& name, const AlgebraPtr& a, int bound);

/// Process exit status for a set of reports: 3 if any proved statement
/// failed, else 4 if any counterexample candidate, else 0.
constexpr int kExitFail = 3;
constexpr int kExitCandidate = 4;
int exit_status(const std::vector<VerdictReport>& reports);

// Generators ----------------------------------------------------------------

struct GeneratorSpec {
  std::string family;  // nakayama | truncated | monomial | commutative_local
  int count = 0;
  int max_vertices = 4;
  int max_arrows = 5;
  int max_length = 5;  // Kupisch entries / nilbound
  double density = 0.3;  // monomial relation density
  int max_dim = 60;
  std::string field = "1009";

  nlohmann::json to_json() const;
  /// "name:count[:key=value,...]".
  static GeneratorSpec parse(const std::string& text);
};

struct Generated {
  AlgebraPtr algebra;  // null when the draw was skipped
  std::string skipped;  // reason for a skipped draw
};

/// Deterministic draw number `index` of a family under `seed`.
Generated generate_one(const GeneratorSpec& spec, std::uint64_t seed, int index);

struct GeneratedBatch {
  std::vector<AlgebraPtr> algebras;
  std::vector<std::string> skipped;  // "family#index: reason"
};
GeneratedBatch generate(const GeneratorSpec& spec, std::uint64_t seed);

/// kQ modulo all paths of length `nilbound`.
AlgebraPtr truncated_algebra(Quiver q, int nilbound, const std::string& field = "1009");

/// Nakayama algebra from its Kupisch series (lengths of the indecomposable
/// projectives, vertex i having its arrow to i + 1, cyclic when asked).
AlgebraPtr nakayama_algebra(const std::vector<int>& kupisch, bool cyclic, const std::string& field = "1009");

// Sweep ---------------------------------------------------------------------

struct SweepConfig {
  std::vector<GeneratorSpec> families;
  std::vector<std::string> checks;
  int bound = 20;
  std::uint64_t seed = 0;
  int workers = 1;
  bool abort_on_fail = true;
  std::function<void(int done, int total)> progress;
};

struct SweepResult {
  nlohmann::json summary;  // deterministic part
  double wall_time_s = 0;
  std::vector<VerdictReport> reports;  // sorted by fingerprint, then check
  std::map<std::string, AlgebraPtr> algebras;  // by fingerprint
  bool any_fail = false;
  bool any_candidate = false;
  bool aborted = false;

  /// The summary with the timing block attached.
  nlohmann::json summary_with_timing() const;
};

SweepResult sweep(const SweepConfig& config);

/// Writes fail and candidate witnesses (algebra file + report) into `dir`.
std::vector<std::string> persist_witnesses(const SweepResult& r, const std::string& dir);

}  // namespace radhom
