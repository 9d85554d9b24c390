#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bdcluster/poisson.hpp"
#include "bdcluster/quiver.hpp"

namespace bdc {

enum class CheckStatus { Pass, Fail };

struct Witness {
  std::vector<Label> labels;
  std::string expected;
  std::string actual;
  std::string note;
};

struct VerificationReport {
  std::string check;
  BDTriple triple;
  CheckStatus status = CheckStatus::Pass;
  std::vector<Witness> witnesses;
  double seconds = 0;
  // Ordered key/value annotations, e.g. pair counts and normalization.
  std::vector<std::pair<std::string, std::string>> details;
  // Labels indexing omega and product when present.
  std::vector<Label> labels;
  std::optional<QMatrix> omega;
  std::optional<QMatrix> product;

  bool passed() const { return status == CheckStatus::Pass; }
  void fail(Witness w);
  void detail(std::string key, std::string value);
  const std::string* find_detail(std::string_view key) const;
};

// Deliberate corruptions used as negative controls.
enum class Fault {
  None,
  DropTerm,      // drop the last term of the first-family function at (n+1-alpha, 1)
  ZeroR0,        // replace the r0 coefficients by zero
  ZeroExchange,  // zero the first row of the exchange matrix
  ExtraFrozen,   // additionally freeze (2,2)
};

std::string to_string(Fault f);
std::optional<Fault> parse_fault(std::string_view name);
// The fault each suite is expected to detect.
Fault default_fault(std::string_view check);

struct Fixture {
  BDTriple triple;
  Seed seed;
  RPlusOperator exotic;
  RPlusOperator standard;
  Fault fault = Fault::None;
};

Fixture make_fixture(const BDTriple& t, Fault fault = Fault::None);

VerificationReport check_log_canonical(const Fixture& fx);
// Reuses the sweep of a previous log-canonicality run when given.
VerificationReport check_compatibility(const Fixture& fx, const VerificationReport* logcanon = nullptr);
VerificationReport check_rank(const Fixture& fx);
VerificationReport check_regularity(const Fixture& fx);
VerificationReport check_frozen_log_canonical(const Fixture& fx);
VerificationReport check_stable_count(const Fixture& fx);
VerificationReport check_s_omega(const Fixture& fx);

// logcanon, compat, rank, regular, frozen, stable in that order.
std::vector<VerificationReport> check_all(const Fixture& fx);

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"logcanon", "compat", "rank", "regular", "frozen", "stable", "somega"};
  return names;
}
VerificationReport run_check(std::string_view name, const Fixture& fx);

struct SOmegaTable {
  std::vector<Label> labels;  // B_std labels, row-major
  std::vector<Rational> first;
  std::vector<Rational> second;
};

// Both sums over the standard cluster under the bracket of the fixture's
// standard operator.
SOmegaTable compute_s_omega(const Fixture& fx);
// The printed case tables; the first matching case wins.
Rational expected_s_omega_first(const BDTriple& t, Label g);
Rational expected_s_omega_second(const BDTriple& t, Label g);

// CYBE and r + r21 = Casimir for the constructed tensor.
VerificationReport check_cybe(const BDTriple& t, bool standard = false, bool zero_r0 = false);
// R_+ against the tensor contraction oracle on every matrix unit.
VerificationReport check_r_plus(const BDTriple& t, bool standard = false);

}  // namespace bdc
