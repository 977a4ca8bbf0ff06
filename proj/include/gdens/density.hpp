#ifndef GDENS_DENSITY_HPP
#define GDENS_DENSITY_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gdens/integer_set.hpp"
#include "gdens/window_family.hpp"

namespace gdens {

enum class TrajectoryKind { Mu, Exh };

struct Sample {
  Natural index;
  Rational value;
  /// False when the value is only a lower bound at the scan horizon.
  bool exact = true;
};

struct Trajectory {
  TrajectoryKind kind = TrajectoryKind::Mu;
  std::vector<Sample> samples;
};

/// Scan cap used when none is given: $GDENS_SCAN_CAP, else 10'000'000.
Index default_scan_cap();

/// μ_n(A) = |A ∩ F_n| / |F_n|.
Rational mu(const WindowFamily& family, Index n, const IntegerSet& a);

Trajectory mu_trajectory(const WindowFamily& family, const IntegerSet& a, Index n_from, Index n_to);

enum class Exactness { Exact, LowerBoundAtHorizon };

struct PhiScan {
  /// Last index for horizon-mode scans; family default when unset.
  std::optional<Index> horizon;
  Index cap = default_scan_cap();
};

struct PhiValue {
  Rational value;
  Exactness exactness = Exactness::Exact;
  /// Last index inspected.
  Index n_used = 0;
  /// Least index attaining the value, if any window met A.
  std::optional<Index> argmax;
};

/// φ(A) = sup_n μ_n(A).
///
/// Finite-support sets are scanned upward until the certificate
///   |A ∩ [M(n), ∞)| / L(n) <= best so far
/// bounds every later μ_m(A), which makes the result exact. Other sets get the
/// maximum over [0, horizon], flagged LowerBoundAtHorizon. Over a truncated
/// family the answer is always flagged LowerBoundAtHorizon.
PhiValue phi(const WindowFamily& family, const IntegerSet& a, const PhiScan& scan = {});

struct WindowMax {
  Index lo = 0;
  Index hi = 0;
  Rational value;
  Index argmax = 0;
};

/// max_{lo <= n <= hi} μ_n(A); throws InvalidArgument on an empty range.
WindowMax windowed_max(const WindowFamily& family, const IntegerSet& a, Index lo, Index hi);

/// The finite surrogate of limsup_n μ_n(A) over [n_from, n_to].
Rational upper_density(const WindowFamily& family, const IntegerSet& a, Index n_from, Index n_to);

/// [(m, φ(A ∖ [0, m]))] for each m in `m_list` (sorted ascending).
Trajectory exh_trajectory(const WindowFamily& family, const IntegerSet& a,
                          const std::vector<Natural>& m_list, const PhiScan& scan = {});

/// "index,numerator,denominator,decimal" rows.
void write_trajectory_csv(std::ostream& out, const Trajectory& t);

}  // namespace gdens

#endif
