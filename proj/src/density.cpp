#include "gdens/density.hpp"

#include <cstdlib>
#include <ostream>

#include "gdens/errors.hpp"

namespace gdens {

namespace {

// Unreduced fraction for the inner scan loops; reduction happens once, on
// the final maximum.
struct Frac {
  Natural num = 0;
  Natural den = 1;
};

bool greater(const Frac& a, const Frac& b) { return a.num * b.den > b.num * a.den; }

Frac window_fraction(const IntegerSet& a, const Window& w) { return {intersect_card(a, w), w.size()}; }

// Sets without a fast counting path are materialized once over the hull of
// the windows they will be counted against, provided the hull is not much
// sparser than the windows themselves.
IntegerSet prepare(const WindowFamily& family, const IntegerSet& a, Index lo, Index hi) {
  if (a.fast_count() || lo > hi) return a;
  Natural hull_lo, hull_hi, mass = 0;
  for (Index n = lo; n <= hi; ++n) {
    const Window w = family.window(n);
    if (n == lo || w.min_element() < hull_lo) hull_lo = w.min_element();
    if (n == lo || w.max_element() > hull_hi) hull_hi = w.max_element();
    mass += w.size();
  }
  if (hull_hi - hull_lo + 1 > 4 * mass + 4096) return a;
  return localized(a, hull_lo, hull_hi);
}

}  // namespace

Index default_scan_cap() {
  if (const char* env = std::getenv("GDENS_SCAN_CAP")) {
    try {
      return parse_index(env);
    } catch (const Error&) {
      // Malformed values fall back to the builtin default.
    }
  }
  return 10'000'000;
}

Rational mu(const WindowFamily& family, Index n, const IntegerSet& a) {
  const Window w = family.window(n);
  return ratio(intersect_card(a, w), w.size());
}

Trajectory mu_trajectory(const WindowFamily& family, const IntegerSet& a, Index n_from, Index n_to) {
  Trajectory t;
  t.kind = TrajectoryKind::Mu;
  if (n_from > n_to) return t;
  const IntegerSet local = prepare(family, a, n_from, n_to);
  t.samples.reserve(static_cast<std::size_t>(n_to - n_from + 1));
  for (Index n = n_from;; ++n) {
    const Window w = family.window(n);
    t.samples.push_back({Natural(n), ratio(intersect_card(local, w), w.size()), true});
    if (n == n_to) break;
  }
  return t;
}

PhiValue phi(const WindowFamily& family, const IntegerSet& a, const PhiScan& scan) {
  PhiValue result;
  Frac best;
  auto consider = [&](Index n, const Frac& f) {
    if (!result.argmax ? f.num > 0 : greater(f, best)) {
      best = f;
      result.argmax = n;
    }
  };

  if (a.finite_support()) {
    for (Index n = 0;; ++n) {
      if (family.max_index() && n > *family.max_index()) {
        result.exactness = Exactness::LowerBoundAtHorizon;
        result.n_used = *family.max_index();
        break;
      }
      if (n >= scan.cap) {
        throw CapExceeded("phi: no certificate for '" + a.describe() + "' within " +
                          std::to_string(scan.cap) + " indices of family '" + family.key() + "'");
      }
      consider(n, window_fraction(a, family.window(n)));
      // Every later window holds at most |A ∩ [M(n), ∞)| elements of A and has
      // at least L(n) elements.
      const Natural reachable = a.count_from(family.min_element_lower_bound(n));
      if (reachable * best.den <= best.num * family.size_lower_bound(n)) {
        result.exactness = family.truncated() ? Exactness::LowerBoundAtHorizon : Exactness::Exact;
        result.n_used = n;
        break;
      }
    }
  } else {
    const Index last = family.clamp(scan.horizon.value_or(family.default_scan()));
    if (last >= scan.cap) {
      throw CapExceeded("phi: horizon " + std::to_string(last) + " exceeds scan cap " +
                        std::to_string(scan.cap));
    }
    const IntegerSet local = prepare(family, a, 0, last);
    for (Index n = 0; n <= last; ++n) consider(n, window_fraction(local, family.window(n)));
    result.exactness = Exactness::LowerBoundAtHorizon;
    result.n_used = last;
  }
  result.value = ratio(best.num, best.den);
  return result;
}

WindowMax windowed_max(const WindowFamily& family, const IntegerSet& a, Index lo, Index hi) {
  if (lo > hi) throw InvalidArgument("empty index window [" + std::to_string(lo) + ", " +
                                     std::to_string(hi) + "]");
  const IntegerSet local = prepare(family, a, lo, hi);
  Frac best;
  Index argmax = lo;
  for (Index n = lo;; ++n) {
    const Frac f = window_fraction(local, family.window(n));
    if (n == lo || greater(f, best)) {
      best = f;
      argmax = n;
    }
    if (n == hi) break;
  }
  return {lo, hi, ratio(best.num, best.den), argmax};
}

Rational upper_density(const WindowFamily& family, const IntegerSet& a, Index n_from, Index n_to) {
  return windowed_max(family, a, n_from, n_to).value;
}

Trajectory exh_trajectory(const WindowFamily& family, const IntegerSet& a,
                          const std::vector<Natural>& m_list, const PhiScan& scan) {
  Trajectory t;
  t.kind = TrajectoryKind::Exh;
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    if (i > 0 && !(m_list[i - 1] < m_list[i])) {
      throw InvalidArgument("exh sample points must be strictly increasing");
    }
    const PhiValue v = phi(family, tail(a, m_list[i]), scan);
    t.samples.push_back({m_list[i], v.value, v.exactness == Exactness::Exact});
  }
  return t;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& t) {
  out << "index,numerator,denominator,decimal\n";
  for (const auto& s : t.samples) {
    out << s.index << ',' << numerator(s.value) << ',' << denominator(s.value) << ','
        << render_decimal(s.value) << '\n';
  }
}

}  // namespace gdens
