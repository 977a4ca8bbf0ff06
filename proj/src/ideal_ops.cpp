#include "gdens/ideal_ops.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

#include "gdens/iset_io.hpp"

namespace gdens {

RealSequence RealSequence::reciprocal() {
  RealSequence s;
  s.kind_ = SequenceKind::Reciprocal;
  return s;
}

RealSequence RealSequence::characteristic(IntegerSet a) {
  RealSequence s;
  s.kind_ = SequenceKind::Characteristic;
  s.set_ = std::move(a);
  return s;
}

RealSequence RealSequence::constant(Rational c) {
  RealSequence s;
  s.kind_ = SequenceKind::Constant;
  s.constant_ = std::move(c);
  return s;
}

RealSequence RealSequence::from_values(std::vector<Rational> values) {
  RealSequence s;
  s.kind_ = SequenceKind::FileBacked;
  s.values_ = std::move(values);
  return s;
}

Rational RealSequence::at(const Natural& k) const {
  if (k < 0) throw OutOfRange("negative sequence index");
  switch (kind_) {
    case SequenceKind::Reciprocal:
      return Rational(Natural(1), k + 1);
    case SequenceKind::Characteristic:
      return set_.contains(k) ? Rational(1) : Rational(0);
    case SequenceKind::Constant:
      return constant_;
    default:
      if (k >= values_.size()) {
        throw OutOfRange("sequence index " + k.str() + " beyond last index " +
                         std::to_string(values_.size()) + " - 1");
      }
      return values_[k.convert_to<std::size_t>()];
  }
}

std::optional<Index> RealSequence::last_index() const {
  if (kind_ != SequenceKind::FileBacked) return std::nullopt;
  if (values_.empty()) return std::nullopt;
  return static_cast<Index>(values_.size() - 1);
}

std::string RealSequence::describe() const {
  switch (kind_) {
    case SequenceKind::Reciprocal:
      return "reciprocal";
    case SequenceKind::Characteristic:
      return "char:" + set_.describe();
    case SequenceKind::Constant:
      return "const:" + render_fraction(constant_);
    default:
      return "values(" + std::to_string(values_.size()) + ")";
  }
}

RealSequence parse_seq(std::istream& in, const std::string& source) {
  std::vector<Rational> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    try {
      values.push_back(parse_rational(line));
    } catch (const InvalidArgument& e) {
      throw ParseError(source, lineno, e.what());
    }
  }
  return RealSequence::from_values(std::move(values));
}

RealSequence read_seq(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open sequence file '" + path.string() + "'");
  return parse_seq(in, path.string());
}

void write_seq(std::ostream& out, const std::vector<Rational>& values) {
  for (const auto& v : values) {
    if (denominator(v) == 1) {
      out << numerator(v) << '\n';
    } else {
      out << render_fraction(v) << '\n';
    }
  }
}

namespace {

// {k : 1/(k+1) >= c} ∪ {k : 1/(k+1) <= d}, c = L + eps, d = L - eps.
IntegerSet reciprocal_exceedance(const Rational& limit, const Rational& eps) {
  const Rational upper = limit + eps;
  const Rational lower = limit - eps;
  IntegerSet result;
  if (upper <= 0) return IntegerSet::everything();
  // k + 1 <= 1/upper
  const Natural last = floor_of(Rational(1) / upper) - 1;
  if (last >= 0) result = IntegerSet::interval(0, last);
  if (lower > 0) {
    // k + 1 >= 1/lower
    Natural first = ceil_of(Rational(1) / lower) - 1;
    if (first < 0) first = 0;
    result = set_union(result, IntegerSet::ray(first));
  }
  return result;
}

IntegerSet abs_exceeds(const Rational& value, const Rational& limit, const Rational& eps) {
  const Rational diff = value - limit;
  return (diff < 0 ? Rational(-diff) : diff) >= eps ? IntegerSet::everything() : IntegerSet();
}

}  // namespace

IntegerSet exceedance_set(const RealSequence& x, const Rational& limit, const Rational& eps,
                          const std::optional<Natural>& h) {
  if (eps <= 0) throw InvalidArgument("eps must be positive");
  IntegerSet result;
  switch (x.kind()) {
    case SequenceKind::Reciprocal:
      result = reciprocal_exceedance(limit, eps);
      break;
    case SequenceKind::Constant:
      result = abs_exceeds(x.constant_value(), limit, eps);
      break;
    case SequenceKind::Characteristic: {
      const bool ones = !abs_exceeds(1, limit, eps).is_empty_explicitly();
      const bool zeros = !abs_exceeds(0, limit, eps).is_empty_explicitly();
      if (ones && zeros) {
        result = IntegerSet::everything();
      } else if (ones) {
        result = x.set();
      } else if (zeros) {
        result = complement(x.set());
      }
      break;
    }
    case SequenceKind::FileBacked: {
      const auto last = x.last_index();
      Natural top = h ? *h : (last ? Natural(*last) : Natural(-1));
      if (h && (!last || *h > *last)) {
        throw OutOfRange("sequence evaluated up to " + h->str() + " but defined only on [0, " +
                         (last ? std::to_string(*last) : std::string("-1")) + "]");
      }
      std::vector<Natural> hits;
      for (Natural k = 0; k <= top; ++k) {
        if (!abs_exceeds(x.at(k), limit, eps).is_empty_explicitly()) hits.push_back(k);
      }
      return IntegerSet::from_sorted(std::move(hits));
    }
  }
  return h ? restrict(result, *h) : result;
}

std::string_view to_string(Convergence c) {
  switch (c) {
    case Convergence::Converges:
      return "converges";
    case Convergence::DoesNotConverge:
      return "does-not-converge";
    default:
      return "undetermined";
  }
}

ConvergenceReport i_converges(const WindowFamily& family, const RealSequence& x, const Rational& limit,
                              const std::vector<Rational>& epsilons, const TrendPolicy& policy) {
  ConvergenceReport report;
  for (const auto& eps : epsilons) {
    Verdict v = member_verdict(family, exceedance_set(x, limit, eps), policy);
    if (x.kind() == SequenceKind::FileBacked) {
      v.horizon += "; sequence truncated at k = " +
                   (x.last_index() ? std::to_string(*x.last_index()) : std::string("-1"));
    }
    report.per_eps.push_back({eps, std::move(v)});
  }
  report.overall = Convergence::Converges;
  auto rank = [](const Verdict& v) { return v.non_member_like() ? 2 : v.member_like() ? 0 : 1; };
  int worst = 0;
  for (const auto& e : report.per_eps) {
    const int r = rank(e.verdict);
    if (r > worst) {
      worst = r;
      report.bottleneck = e.eps;
    }
  }
  if (worst == 2) report.overall = Convergence::DoesNotConverge;
  if (worst == 1) report.overall = Convergence::Undetermined;
  return report;
}

std::vector<Natural> default_m_samples() {
  std::vector<Natural> out{0};
  for (unsigned e = 0; e <= 40; ++e) out.push_back(pow2(e));
  return out;
}

PseudoUnion pseudo_union(const WindowFamily& family, const std::vector<IntegerSet>& members,
                         const PseudoUnionConfig& config) {
  PseudoUnion result;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Rational tol = config.tolerance(i + 1);
    std::optional<Natural> cut;
    PhiValue at_cut;
    for (const auto& m : config.m_samples) {
      const PhiValue v = phi(family, tail(members[i], m), config.scan);
      if (v.value <= tol) {
        cut = m;
        at_cut = v;
        break;
      }
    }
    if (!cut) {
      throw PseudoUnionFailure(i, "member " + std::to_string(i) + " ('" + members[i].describe() +
                                      "') never reaches phi <= " + render_fraction(tol) +
                                      " on the sampled cut points; it may not lie in Exh(phi)");
    }
    const IntegerSet piece = tail(members[i], *cut);
    result.set = i == 0 ? piece : set_union(result.set, piece);
    result.thresholds.push_back(*cut);
    result.phi_at_threshold.push_back(at_cut);
  }
  return result;
}

WitnessReport separating_witness(const WindowFamily& family_a, const WindowFamily& family_b, Index mu_to,
                                 Index density_to) {
  WitnessReport report;
  report.set = window_union_set(family_b);
  report.mu_b = mu_trajectory(family_b, report.set, 1, mu_to);
  report.mu_b_identically_one = true;
  for (const auto& s : report.mu_b.samples) {
    if (s.value != 1) report.mu_b_identically_one = false;
  }

  report.densities_strictly_decreasing_from_3 = true;
  for (Index n = 1; n <= density_to; ++n) {
    const Natural big = factorial(n);
    if (big > std::numeric_limits<Index>::max()) break;
    const Index big_n = big.convert_to<Index>();
    report.densities_a.push_back({n, big_n, mu(family_a, big_n, report.set)});
    const auto& d = report.densities_a;
    if (n > 3 && !(d[d.size() - 1].value < d[d.size() - 2].value)) {
      report.densities_strictly_decreasing_from_3 = false;
    }
  }
  return report;
}

}  // namespace gdens
