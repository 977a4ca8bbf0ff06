#ifndef GDENS_VERDICT_HPP
#define GDENS_VERDICT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdens/density.hpp"

namespace gdens {

enum class VerdictKind { MemberExact, NonMemberExact, TrendMember, TrendNonMember, Inconclusive };

std::string_view to_string(VerdictKind kind);

/// Window schedule [2^k, 2^(k+1)) for k_from <= k <= k_to, clipped to
/// `index_limit` (family default scan when unset) and to the family range.
struct TrendPolicy {
  unsigned k_from = 4;
  unsigned k_to = 16;
  /// TrendMember when the window maxima decay at least geometrically by rho
  /// on average: w_last <= rho^(K-1) * w_first.
  Rational rho{3, 4};
  /// TrendNonMember when every window maximum is >= delta.
  Rational delta{1, 100};
  std::optional<Index> index_limit;
  Index cap = default_scan_cap();
};

/// Diagnosis of A ∈ I(F) = {A : μ_n(A) -> 0}.
///
/// Exact kinds carry a certificate: either finite support (μ_n(A) <= |A|/L(n))
/// or a closed-form rule giving μ_n(A) >= delta for every n >= witness_from,
/// with spot checks recomputed exactly. Trend kinds carry the windowed maxima.
struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::string family;
  std::string set;
  std::string rule;
  std::string detail;
  Rational delta;
  std::optional<Index> witness_from;
  std::vector<std::pair<Index, Rational>> spot_checks;
  std::vector<WindowMax> windows;
  Rational estimate;
  std::string horizon;

  bool exact() const { return kind == VerdictKind::MemberExact || kind == VerdictKind::NonMemberExact; }
  bool member_like() const { return kind == VerdictKind::MemberExact || kind == VerdictKind::TrendMember; }
  bool non_member_like() const {
    return kind == VerdictKind::NonMemberExact || kind == VerdictKind::TrendNonMember;
  }
};

Verdict member_verdict(const WindowFamily& family, const IntegerSet& a, const TrendPolicy& policy = {});

/// Single-line JSON record: kind, family, set, certificate, evidence, horizons.
/// Key order is fixed so that records are byte-stable across runs.
std::string verdict_record(const Verdict& v);

}  // namespace gdens

#endif
