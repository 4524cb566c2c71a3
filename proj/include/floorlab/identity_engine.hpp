#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "floorlab/algebraic_real.hpp"
#include "floorlab/certified_floor.hpp"
#include "floorlab/field_element.hpp"
#include "floorlab/int_polynomial.hpp"

namespace floorlab {

enum class Variant { Z1, Z2, Main, Delta, MVar, Pair, Poly, Triple };
std::string variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);

/// One identity family instance. The identities checked per variant:
///   Z1     [([n a]+1) a] = [n a^2] + 1            (all n)
///   Z2     [[n a] a] + 1 = [n a^2]                (n != 0)
///   Main   [[n a^l] a^k] + 1 = [n a^(l+k)]        (n != 0)
///   Delta  [[n a^l] a^k + delta] = [n a^(l+k)]    (all n)
///   MVar   [[n a^l] a^k] + [n m a^l] + 1 - m [n a^l] = [n a^(l+k)]  (n != 0)
///   Pair   [n b] - [[n a] b/a] = [n m a] + 1 - m [n a]              (n != 0)
///   Poly   [[P(n) a^l] a^k] + 1 = [P(n) a^(l+k)]  (P(n) != 0)
///   Triple [[[n a] a] a] + 1 = [n a^3]            (n != 0)
struct IdentityCase {
  Variant variant = Variant::Main;
  AlgebraicReal alpha;
  unsigned l = 1, k = 1, m = 1;
  Rational delta{0};
  IntPolynomial poly;
  std::optional<AlgebraicReal> beta;      // independent second number
  std::optional<FieldElement> beta_elem;  // second number given in Q[alpha]
  unsigned relation_height_bound = 64;    // for beta in Q*alpha + Q search

  static IdentityCase z1(AlgebraicReal a);
  static IdentityCase z2(AlgebraicReal a);
  static IdentityCase main_variant(AlgebraicReal a, unsigned l, unsigned k);
  static IdentityCase delta_variant(AlgebraicReal a, unsigned l, unsigned k, Rational delta);
  static IdentityCase m_variant(AlgebraicReal a, unsigned l, unsigned k, unsigned m);
  static IdentityCase pair_variant(AlgebraicReal a, AlgebraicReal b, unsigned m);
  static IdentityCase pair_in_field(AlgebraicReal a, FieldElement b, unsigned m);
  static IdentityCase poly_variant(AlgebraicReal a, unsigned l, unsigned k, IntPolynomial p);
  static IdentityCase triple(AlgebraicReal a);
};

struct ResidualReport {
  Int n;
  Int lhs{0}, rhs{0}, residual{0};
  bool skipped = false;  // n excluded by the variant (n = 0 or a root of P)
};

ResidualReport check_identity(const IdentityCase& c, const Int& n);

struct ScanOptions {
  std::uint64_t violation_cap = 1000;
  unsigned workers = 0;  // 0 = default_workers()
};

struct ScanSummary {
  Int n_lo, n_hi;
  std::uint64_t checked = 0, skipped = 0;
  std::uint64_t violations_total = 0;  // always exact, even when the list is capped
  std::vector<ResidualReport> violations;  // ascending by n, capped
  bool capped = false;
  /// Violating n of smallest |n| (positive preferred on ties).
  std::optional<Int> first_violation;
};

ScanSummary scan_identity(const IdentityCase& c, const Int& n_lo, const Int& n_hi,
                          const ScanOptions& opt = {});

/// Checks |n| = 1, 2, ... (positive before negative) up to n_max; returns the
/// first violation found.
std::optional<ResidualReport> first_violation_search(const IdentityCase& c, const Int& n_max,
                                                     const ScanOptions& opt = {});

struct ConditionReport {
  std::optional<FieldElement> value;  // alpha^(l+k) - m*alpha^l, or beta - m*alpha
  bool is_integer = false;
  std::optional<Int> M;
  bool in_range = false;          // exact range membership of M
  bool alpha_irrational = false;  // pair variant clause
  bool beta_in_field = true;      // pair variant: false = NotInField outcome
  bool satisfied = false;         // the full condition verdict
  std::string range_text;
};

/// alpha^(l+k) - m*alpha^l in Z with 1 <= M and M^k < (m+1)^l, all exact.
ConditionReport check_condition(const AlgebraicReal& alpha, unsigned l, unsigned k, unsigned m);

/// beta - m*alpha in Z with 1 <= M < alpha, plus alpha irrational; beta must
/// lie in Q*alpha + Q (otherwise reported NotInField, condition false).
ConditionReport check_condition_pair(const AlgebraicReal& alpha, const AlgebraicReal& beta,
                                     unsigned m, unsigned height_bound = 64);

/// Exact bounded-height search for beta = s*alpha + r with s, r rational;
/// empty when no relation is found within the bound.
std::optional<FieldElement> express_in_field(const AlgebraicReal& alpha, const AlgebraicReal& beta,
                                             unsigned height_bound = 64);

/// The admissible shifts [alpha^k - 1, 1) of the Delta variant.
struct DeltaWindow {
  FieldElement lower;  // alpha^k - 1, inclusive
  bool contains(const Rational& delta) const;
};
DeltaWindow admissible_delta_interval(const AlgebraicReal& alpha, unsigned k);

/// r(n) = [n m alpha] + 1 - m [n alpha]; always in {1, ..., m}.
Int r_of(const Int& n, const AlgebraicReal& alpha, unsigned m);

/// Condition verdict appropriate to the case's variant.
ConditionReport condition_for_case(const IdentityCase& c);

/// How a condition verdict and a scan verdict relate. A hard disagreement
/// (condition true yet violations found) would falsify a theorem; it exists
/// as a bug detector and maps to the CLI's exit code 2.
enum class Agreement { IdentityOnly, Consistent, HardDisagreement, Undistinguished };
Agreement classify_agreement(bool has_condition, bool condition_satisfied,
                             std::uint64_t violations);
std::string agreement_name(Agreement a);

struct CrossRow {
  std::string alpha_text;
  bool condition = false;
  std::uint64_t violations_total = 0;
  std::optional<Int> first_violation;
  enum class Flag { Consistent, HardFailure, Undistinguished, NoVerdict } flag;
};

/// For each alpha in the grid: condition verdict vs identity-scan verdict.
/// condition-true + violation = hard failure; condition-false + clean scan is
/// only "undistinguished at this range".
std::vector<CrossRow> cross_validate(const IdentityCase& family,
                                     std::span<const AlgebraicReal> grid, const Int& n_lo,
                                     const Int& n_hi, const ScanOptions& opt = {});

}  // namespace floorlab
