#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dronecell/engine.hpp"

namespace dronecell {

// Description of one sweep: vary `parameter` (a config key) over `values`
// for each policy, running `replications` paired (mobile vs fixed)
// simulations per grid point on seeds {base.seed, base.seed+1, ...}.
struct SweepSpec {
  std::string parameter;
  std::vector<double> values;
  SimConfig base;
  int replications = 200;
  std::vector<PolicyKind> policies;
};

// Everything retained from one paired run; cheap enough to keep per seed
// so trends can be tested on the paired samples, not only on the means.
struct PairedRunSample {
  std::uint64_t seed = 0;
  double se_mobile = 0.0;
  double se_fixed = 0.0;
  double se_slot_std_mobile = 0.0;
  double cee_mobile = 0.0;
  double cee_fixed = 0.0;
  double mee_mobile = 0.0;
  double mee_fixed = 0.0;
  double mech_energy_mobile_j = 0.0;
  double mech_energy_fixed_j = 0.0;
  double completed_mobile = 0.0;
  double completed_fixed = 0.0;
  std::uint64_t mobility_digest_mobile = 0;
  std::uint64_t mobility_digest_fixed = 0;
};

// Aggregated view of one (value, policy) grid point.  Means are taken
// over the runs whose value is finite (a run that never transmitted has
// no mean SE).
struct SweepRow {
  std::string parameter;
  double value = 0.0;
  PolicyKind policy;
  int runs = 0;
  double se_mobile = 0.0;
  double se_fixed = 0.0;
  double seg_percent = 0.0;      // from the two population means
  double se_std_runs = 0.0;      // across-run std of per-run mean SE (mobile)
  double se_std_slots = 0.0;     // mean across runs of within-run slot SE std
  double cee_mobile = 0.0;
  double cee_fixed = 0.0;
  double mee_mobile = 0.0;
  double mee_fixed = 0.0;
  double completed_mobile = 0.0;
  double completed_fixed = 0.0;
};

struct SweepCell {
  double value = 0.0;
  PolicyKind policy;
  std::vector<PairedRunSample> samples;

  SweepRow summarize(const std::string& parameter) const;
};

struct SweepResult {
  std::string parameter;
  std::vector<SweepCell> cells;  // ordered by (value index, policy index)

  std::vector<SweepRow> rows() const;
};

// Execute the sweep.  Grid points and replications are independent jobs;
// with threads > 1 they run concurrently and merge by job index, so the
// result never depends on scheduling.  threads = 0 means one per core.
// A failing run aborts the sweep with the offending grid point and seed
// named in the error.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 0);

// Users per 100 m^2 of service area.
double user_density(const SimConfig& cfg);

}  // namespace dronecell
