#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tensorcomm/gellmann.hpp"

namespace tcm {

enum class CheckStatus {
  Pass,
  Fail,
  /// The checked statement is known to be false and the computed behavior
  /// reproduces the documented discrepancy exactly.
  ErratumExpected,
  /// The checked statement is known to be false but the computed behavior
  /// no longer matches the documented discrepancy.
  ErratumChanged,
};

std::string_view to_string(CheckStatus status);

struct Counterexample {
  std::string location;
  std::string expected;
  std::string computed;
};

/// One verified identity: its statement, the parameter range it was checked
/// over, the worst residual observed, and any counterexamples found.
struct IdentityRecord {
  std::string name;
  std::string claim;
  std::string range;
  double max_residual = 0.0;
  CheckStatus status = CheckStatus::Pass;
  std::vector<Counterexample> counterexamples;
  std::string note;
};

struct VerificationReport {
  int n_max = 0;
  int p_max = 0;
  double tol = 1e-12;
  std::vector<IdentityRecord> records;

  /// True iff no record is Fail or ErratumChanged.
  bool ok() const;
  const IdentityRecord* find(std::string_view name) const;
};

/// Smallest singular value of the np x np matrix whose rows are the flattened
/// padded identity and generators; the system spans the whole matrix space
/// iff this is bounded away from zero.
double basis_min_singular_value(const GellMannSystem& system);

/// The three commutator-expansion sub-claims for a single (n, p) cell:
/// expansion exactness, total antisymmetry on the square block, and the
/// high-index vanishing claim (the last is checked, not assumed; violations
/// are recorded with their computed values). Cells with n > p are outside
/// the claimed regime and are reported as skipped.
std::vector<IdentityRecord> check_structure_identities(int n, int p, double tol);

/// Run every identity check over the grid 2 <= n <= n_max, 2 <= p <= p_max.
VerificationReport full_report(int n_max, int p_max, double tol = 1e-12);

}  // namespace tcm
