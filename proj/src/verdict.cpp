#include "gdens/verdict.hpp"

#include <algorithm>

#include <json.hpp>

#include "gdens/errors.hpp"

namespace gdens {

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::MemberExact:
      return "MemberExact";
    case VerdictKind::NonMemberExact:
      return "NonMemberExact";
    case VerdictKind::TrendMember:
      return "TrendMember";
    case VerdictKind::TrendNonMember:
      return "TrendNonMember";
    default:
      return "Inconclusive";
  }
}

namespace {

constexpr Index kSpotChecks = 5;

// Recomputes μ_n for the first few certified indices. A failure means the
// closed-form rule does not apply to this family and the rule is skipped.
bool spot_check(const WindowFamily& family, const IntegerSet& a, Index from, const Rational& delta,
                Verdict& v) {
  v.spot_checks.clear();
  for (Index n = from; n < from + kSpotChecks; ++n) {
    const Rational value = mu(family, n, a);
    if (value < delta) return false;
    v.spot_checks.emplace_back(n, value);
  }
  return true;
}

// Least n with M(n) > bound, for families whose windows escape.
std::optional<Index> first_index_above(const WindowFamily& family, const Natural& bound, Index cap) {
  for (Index n = 0; n < cap; ++n) {
    if (family.min_element_lower_bound(n) > bound) return n;
  }
  return std::nullopt;
}

bool try_exact_non_member(const WindowFamily& family, const IntegerSet& a, const TrendPolicy& policy,
                          Verdict& v) {
  // Infinitely many indices only exist in untruncated families.
  if (family.truncated()) return false;

  if (const auto tag = a.window_union(); tag && tag->family_key == family.key()) {
    std::optional<Index> from = Index{0};
    if (tag->at_most) from = family.windows_escape() ? first_index_above(family, *tag->at_most, policy.cap)
                                                     : std::nullopt;
    if (from && spot_check(family, a, *from, Rational(1), v)) {
      v.kind = VerdictKind::NonMemberExact;
      v.rule = "window-union";
      v.detail = "A contains F_n for every n >= " + std::to_string(*from) + ", so mu_n(A) = 1 there";
      v.delta = 1;
      v.witness_from = from;
      return true;
    }
  }

  if (a.kind() == SetKind::IntervalUnion && a.ray_start()) {
    const Natural& r = *a.ray_start();
    if (family.windows_escape()) {
      const auto from = first_index_above(family, r - 1, policy.cap);
      if (from && spot_check(family, a, *from, Rational(1), v)) {
        v.kind = VerdictKind::NonMemberExact;
        v.rule = "cofinite-escaping-windows";
        v.detail = "A contains [" + r.str() + ", inf) and min F_n >= " + r.str() + " for n >= " +
                   std::to_string(*from);
        v.delta = 1;
        v.witness_from = from;
        return true;
      }
    } else if (family.kind() == FamilyKind::ClassicalPrefix && r < policy.cap) {
      // |A ∩ [1, n]| >= n - r + 1, hence mu_n(A) > 1/2 for n >= 2r.
      const Index from = std::max<Index>(1, 2 * r.convert_to<Index>());
      if (spot_check(family, a, from, Rational(1, 2), v)) {
        v.kind = VerdictKind::NonMemberExact;
        v.rule = "cofinite-prefix";
        v.detail = "A contains [" + r.str() + ", inf), so mu_n(A) >= (n - " + r.str() +
                   " + 1)/n >= 1/2 for n >= " + std::to_string(from);
        v.delta = Rational(1, 2);
        v.witness_from = from;
        return true;
      }
    }
  }
  return false;
}

void classify_trend(const WindowFamily& family, const IntegerSet& a, const TrendPolicy& policy,
                    Verdict& v) {
  const Index limit = family.clamp(policy.index_limit.value_or(family.default_scan()));
  for (unsigned k = policy.k_from; k <= policy.k_to && k < 63; ++k) {
    const Index lo = Index{1} << k;
    if (lo > limit) break;
    const Index hi = std::min<Index>((Index{1} << (k + 1)) - 1, limit);
    v.windows.push_back(windowed_max(family, a, lo, hi));
  }
  if (!v.windows.empty()) {
    v.horizon = "trend windows n in [" + std::to_string(v.windows.front().lo) + ", " +
                std::to_string(v.windows.back().hi) + "] (" + std::to_string(v.windows.size()) +
                " windows)";
  } else {
    v.horizon = "no trend window fits below index " + std::to_string(limit);
  }
  if (v.windows.size() < 2) {
    v.kind = VerdictKind::Inconclusive;
    v.rule = "trend";
    v.detail = "fewer than two trend windows within the index range";
    return;
  }

  const Rational& first = v.windows.front().value;
  const Rational& last = v.windows.back().value;
  Rational floor_value = first;
  for (const auto& w : v.windows) floor_value = std::min(floor_value, w.value);

  Rational decay_bound = first;
  for (std::size_t i = 1; i < v.windows.size(); ++i) decay_bound *= policy.rho;

  const bool all_zero = std::all_of(v.windows.begin(), v.windows.end(),
                                    [](const WindowMax& w) { return w.value == 0; });
  const bool decays = all_zero || (first > 0 && last <= decay_bound);
  const bool bounded_below = floor_value >= policy.delta;

  v.rule = "trend";
  if (decays && !bounded_below) {
    v.kind = VerdictKind::TrendMember;
    v.estimate = last;
    v.detail = "last window maximum " + render_fraction(last) + " <= rho^" +
               std::to_string(v.windows.size() - 1) + " * first window maximum " +
               render_fraction(first);
  } else if (bounded_below && !decays) {
    v.kind = VerdictKind::TrendNonMember;
    v.estimate = floor_value;
    v.delta = policy.delta;
    v.detail = "every window maximum >= delta; smallest " + render_fraction(floor_value);
  } else {
    v.kind = VerdictKind::Inconclusive;
    v.estimate = last;
    v.detail = decays ? "window maxima both decay and stay above delta"
                      : "window maxima neither decay by rho nor stay above delta";
  }
}

}  // namespace

Verdict member_verdict(const WindowFamily& family, const IntegerSet& a, const TrendPolicy& policy) {
  Verdict v;
  v.family = family.key();
  v.set = a.describe();

  if (a.finite_support()) {
    v.kind = VerdictKind::MemberExact;
    v.rule = "finite-support";
    const auto mx = a.support_max();
    v.detail = "|A| = " + a.cardinality().str() + (mx ? ", max A = " + mx->str() : std::string()) +
               "; mu_n(A) <= |A|/L(n) -> 0";
    v.horizon = family.truncated()
                    ? "family truncated at n = " + std::to_string(*family.max_index())
                    : "none";
    return v;
  }

  try {
    if (try_exact_non_member(family, a, policy, v)) {
      v.horizon = "closed form; spot checks n in [" + std::to_string(*v.witness_from) + ", " +
                  std::to_string(*v.witness_from + kSpotChecks - 1) + "]";
      return v;
    }
    v.spot_checks.clear();
    classify_trend(family, a, policy, v);
  } catch (const Error& e) {
    v.kind = VerdictKind::Inconclusive;
    v.rule = "diagnostic";
    v.detail = e.what();
    if (v.horizon.empty()) v.horizon = "evaluation stopped";
  }
  if (family.truncated()) v.horizon += "; family truncated at n = " + std::to_string(*family.max_index());
  return v;
}

std::string verdict_record(const Verdict& v) {
  nlohmann::ordered_json rec;
  rec["kind"] = std::string(to_string(v.kind));
  rec["family"] = v.family;
  rec["set"] = v.set;
  nlohmann::ordered_json cert;
  cert["rule"] = v.rule;
  cert["detail"] = v.detail;
  if (v.kind == VerdictKind::NonMemberExact || v.kind == VerdictKind::TrendNonMember) {
    cert["delta"] = render_fraction(v.delta);
  }
  if (v.witness_from) cert["witness"] = "n >= " + std::to_string(*v.witness_from);
  if (!v.spot_checks.empty()) {
    auto checks = nlohmann::ordered_json::array();
    for (const auto& [n, value] : v.spot_checks) {
      checks.push_back({{"n", n}, {"mu", render_fraction(value)}});
    }
    cert["spot_checks"] = checks;
  }
  rec["certificate"] = cert;
  if (!v.windows.empty()) {
    auto windows = nlohmann::ordered_json::array();
    for (const auto& w : v.windows) {
      windows.push_back({{"lo", w.lo}, {"hi", w.hi}, {"max", render_fraction(w.value)}, {"argmax", w.argmax}});
    }
    rec["windows"] = windows;
    rec["estimate"] = render_fraction(v.estimate);
  }
  rec["horizons"] = v.horizon;
  return rec.dump();
}

}  // namespace gdens
