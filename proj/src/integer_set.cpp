#include "gdens/integer_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gdens/errors.hpp"
#include "generators_impl.hpp"

namespace gdens {

// ---------------------------------------------------------------------------
// Interval list algebra

IntervalList normalize(IntervalList runs) {
  for (const auto& r : runs) {
    if (r.lo < 0 || r.lo > r.hi) {
      throw InvalidArgument("malformed interval [" + r.lo.str() + ", " + r.hi.str() + "]");
    }
  }
  std::sort(runs.begin(), runs.end(),
            [](const ClosedInterval& a, const ClosedInterval& b) { return a.lo < b.lo; });
  IntervalList out;
  out.reserve(runs.size());
  for (auto& r : runs) {
    if (!out.empty() && r.lo <= out.back().hi + 1) {
      if (r.hi > out.back().hi) out.back().hi = r.hi;
    } else {
      out.push_back(std::move(r));
    }
  }
  return out;
}

bool is_normalized(const IntervalList& runs) {
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].lo < 0 || runs[i].lo > runs[i].hi) return false;
    if (i > 0 && !(runs[i - 1].hi + 1 < runs[i].lo)) return false;
  }
  return true;
}

IntervalList unite(const IntervalList& a, const IntervalList& b) {
  IntervalList all;
  all.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(all),
             [](const ClosedInterval& x, const ClosedInterval& y) { return x.lo < y.lo; });
  IntervalList out;
  for (auto& r : all) {
    if (!out.empty() && r.lo <= out.back().hi + 1) {
      if (r.hi > out.back().hi) out.back().hi = r.hi;
    } else {
      out.push_back(r);
    }
  }
  return out;
}

IntervalList intersect(const IntervalList& a, const IntervalList& b) {
  IntervalList out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const Natural& lo = std::max(a[i].lo, b[j].lo);
    const Natural& hi = std::min(a[i].hi, b[j].hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (a[i].hi < b[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

IntervalList subtract(const IntervalList& a, const IntervalList& b) {
  IntervalList out;
  std::size_t j = 0;
  for (const auto& r : a) {
    Natural cur = r.lo;
    while (j < b.size() && b[j].hi < cur) ++j;
    std::size_t k = j;
    while (k < b.size() && b[k].lo <= r.hi) {
      if (b[k].lo > cur) out.push_back({cur, b[k].lo - 1});
      if (b[k].hi + 1 > cur) cur = b[k].hi + 1;
      if (cur > r.hi) break;
      ++k;
    }
    if (cur <= r.hi) out.push_back({cur, r.hi});
  }
  return out;
}

IntervalList clip(const IntervalList& runs, const Natural& lo, const Natural& hi) {
  if (lo > hi) return {};
  return intersect(runs, IntervalList{{lo, hi}});
}

Natural cardinality(const IntervalList& runs) {
  Natural total = 0;
  for (const auto& r : runs) total += r.size();
  return total;
}

// ---------------------------------------------------------------------------
// Default generator queries

IntervalList Generator::runs_in(const Natural& lo, const Natural& hi) const {
  IntervalList out;
  for (Natural x = lo; x <= hi; ++x) {
    if (!contains(x)) continue;
    if (!out.empty() && out.back().hi + 1 == x) {
      out.back().hi = x;
    } else {
      out.push_back({x, x});
    }
  }
  return out;
}

Natural Generator::count_in(const Natural& lo, const Natural& hi) const {
  return cardinality(runs_in(lo, hi));
}

// ---------------------------------------------------------------------------
// IntegerSet

namespace {

IntervalList runs_of_sorted(const std::vector<Natural>& values) {
  IntervalList out;
  for (const auto& v : values) {
    if (!out.empty() && out.back().hi + 1 == v) {
      out.back().hi = v;
    } else {
      out.push_back({v, v});
    }
  }
  return out;
}

std::string join_runs(const IntervalList& runs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i) os << ',';
    os << runs[i].lo;
    if (runs[i].hi != runs[i].lo) os << '-' << runs[i].hi;
  }
  return os.str();
}

}  // namespace

IntegerSet::IntegerSet() : rep_(Explicit{}) {}

IntegerSet IntegerSet::from_sorted(std::vector<Natural> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) throw InvalidArgument("negative element " + values[i].str());
    if (i > 0 && !(values[i - 1] < values[i])) {
      throw InvalidArgument("explicit set not strictly increasing at position " +
                            std::to_string(i));
    }
  }
  return IntegerSet(Explicit{std::move(values)});
}

IntegerSet IntegerSet::from_elements(std::vector<Natural> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return from_sorted(std::move(values));
}

IntegerSet IntegerSet::from_intervals(IntervalList runs, std::optional<Natural> ray_from) {
  runs = normalize(std::move(runs));
  if (ray_from) {
    if (*ray_from < 0) throw InvalidArgument("negative ray start");
    // Absorb runs touching or inside the ray.
    while (!runs.empty() && runs.back().hi + 1 >= *ray_from) {
      if (runs.back().lo < *ray_from) ray_from = runs.back().lo;
      runs.pop_back();
    }
  }
  Intervals rep;
  rep.prefix.reserve(runs.size());
  Natural acc = 0;
  for (const auto& r : runs) {
    rep.prefix.push_back(acc);
    acc += r.size();
  }
  rep.runs = std::move(runs);
  rep.ray = std::move(ray_from);
  return IntegerSet(std::move(rep));
}

IntegerSet IntegerSet::interval(const Natural& lo, const Natural& hi) {
  return from_intervals({{lo, hi}});
}

IntegerSet IntegerSet::ray(const Natural& from) { return from_intervals({}, from); }

IntegerSet IntegerSet::everything() { return ray(0); }

IntegerSet IntegerSet::from_generator(std::shared_ptr<const Generator> gen) {
  if (!gen) throw InvalidArgument("null generator");
  return IntegerSet(Generated{std::move(gen)});
}

SetKind IntegerSet::kind() const {
  switch (rep_.index()) {
    case 0:
      return SetKind::ExplicitFinite;
    case 1:
      return SetKind::IntervalUnion;
    default:
      return SetKind::GeneratorBacked;
  }
}

bool IntegerSet::is_empty_explicitly() const {
  if (auto* e = std::get_if<Explicit>(&rep_)) return e->values.empty();
  if (auto* i = std::get_if<Intervals>(&rep_)) return i->runs.empty() && !i->ray;
  return false;
}

bool IntegerSet::finite_support() const {
  if (std::holds_alternative<Explicit>(rep_)) return true;
  if (auto* i = std::get_if<Intervals>(&rep_)) return !i->ray;
  return false;
}

std::optional<Natural> IntegerSet::horizon() const {
  if (auto* g = std::get_if<Generated>(&rep_)) return g->gen->horizon();
  return std::nullopt;
}

std::optional<Natural> IntegerSet::support_max() const {
  if (auto* e = std::get_if<Explicit>(&rep_)) {
    if (e->values.empty()) return std::nullopt;
    return e->values.back();
  }
  if (auto* i = std::get_if<Intervals>(&rep_)) {
    if (i->ray) throw InvalidArgument("support_max of an unbounded set");
    if (i->runs.empty()) return std::nullopt;
    return i->runs.back().hi;
  }
  throw InvalidArgument("support_max of a generator-backed set");
}

Natural IntegerSet::cardinality() const {
  if (auto* e = std::get_if<Explicit>(&rep_)) return Natural(e->values.size());
  if (auto* i = std::get_if<Intervals>(&rep_)) {
    if (i->ray) throw InvalidArgument("cardinality of an unbounded set");
    if (i->runs.empty()) return 0;
    return i->prefix.back() + i->runs.back().size();
  }
  throw InvalidArgument("cardinality of a generator-backed set");
}

void IntegerSet::check_horizon(const Natural& hi) const {
  auto* g = std::get_if<Generated>(&rep_);
  if (!g) return;
  const auto h = g->gen->horizon();
  if (h && hi > *h) {
    throw HorizonExceeded("set '" + g->gen->describe() + "' queried up to " + hi.str() +
                          " beyond its certified horizon " + h->str());
  }
}

Natural IntegerSet::count_upto(const Natural& x) const {
  if (x < 0) return 0;
  if (auto* e = std::get_if<Explicit>(&rep_)) {
    return Natural(std::upper_bound(e->values.begin(), e->values.end(), x) - e->values.begin());
  }
  const auto& rep = std::get<Intervals>(rep_);
  Natural total = 0;
  auto it = std::upper_bound(rep.runs.begin(), rep.runs.end(), x,
                             [](const Natural& v, const ClosedInterval& r) { return v < r.lo; });
  if (it != rep.runs.begin()) {
    const std::size_t idx = static_cast<std::size_t>(it - rep.runs.begin()) - 1;
    const auto& r = rep.runs[idx];
    total = rep.prefix[idx] + (std::min(r.hi, x) - r.lo + 1);
  }
  if (rep.ray && x >= *rep.ray) total += x - *rep.ray + 1;
  return total;
}

bool IntegerSet::contains(const Natural& x) const {
  if (x < 0) return false;
  if (auto* g = std::get_if<Generated>(&rep_)) {
    check_horizon(x);
    return g->gen->contains(x);
  }
  return count_in(x, x) == 1;
}

Natural IntegerSet::count_in(const Natural& lo_in, const Natural& hi) const {
  const Natural lo = lo_in < 0 ? Natural(0) : lo_in;
  if (lo > hi) return 0;
  if (auto* g = std::get_if<Generated>(&rep_)) {
    check_horizon(hi);
    return g->gen->count_in(lo, hi);
  }
  return count_upto(hi) - (lo == 0 ? Natural(0) : count_upto(lo - 1));
}

Natural IntegerSet::count_from(const Natural& lo) const {
  if (!finite_support()) throw InvalidArgument("count_from needs finite support");
  const auto mx = support_max();
  if (!mx || *mx < lo) return 0;
  return count_in(lo, *mx);
}

IntervalList IntegerSet::runs_in(const Natural& lo_in, const Natural& hi) const {
  const Natural lo = lo_in < 0 ? Natural(0) : lo_in;
  if (lo > hi) return {};
  if (auto* g = std::get_if<Generated>(&rep_)) {
    check_horizon(hi);
    return g->gen->runs_in(lo, hi);
  }
  if (auto* e = std::get_if<Explicit>(&rep_)) {
    auto first = std::lower_bound(e->values.begin(), e->values.end(), lo);
    auto last = std::upper_bound(first, e->values.end(), hi);
    return runs_of_sorted(std::vector<Natural>(first, last));
  }
  const auto& rep = std::get<Intervals>(rep_);
  auto first = std::lower_bound(rep.runs.begin(), rep.runs.end(), lo,
                                [](const ClosedInterval& r, const Natural& v) { return r.hi < v; });
  IntervalList out;
  for (auto it = first; it != rep.runs.end() && it->lo <= hi; ++it) {
    out.push_back({std::max(it->lo, lo), std::min(it->hi, hi)});
  }
  if (rep.ray && *rep.ray <= hi) {
    const Natural start = std::max(*rep.ray, lo);
    if (!out.empty() && out.back().hi + 1 >= start) {
      out.back().hi = hi;
    } else {
      out.push_back({start, hi});
    }
  }
  return out;
}

bool IntegerSet::fast_count() const {
  if (auto* g = std::get_if<Generated>(&rep_)) return g->gen->fast_count();
  return true;
}

std::optional<WindowUnionTag> IntegerSet::window_union() const {
  if (auto* g = std::get_if<Generated>(&rep_)) return g->gen->window_union();
  return std::nullopt;
}

std::string IntegerSet::describe() const {
  if (auto* e = std::get_if<Explicit>(&rep_)) {
    if (e->values.empty()) return "empty";
    std::ostringstream os;
    os << "list:";
    const std::size_t shown = std::min<std::size_t>(e->values.size(), 8);
    for (std::size_t i = 0; i < shown; ++i) os << (i ? "," : "") << e->values[i];
    if (shown < e->values.size()) os << ",...(" << e->values.size() << " elements)";
    return os.str();
  }
  if (auto* i = std::get_if<Intervals>(&rep_)) {
    if (i->runs.empty() && !i->ray) return "empty";
    std::string s = "intervals:";
    if (i->runs.size() > 8) {
      IntervalList head(i->runs.begin(), i->runs.begin() + 8);
      s += join_runs(head) + ",...(" + std::to_string(i->runs.size()) + " runs)";
    } else {
      s += join_runs(i->runs);
    }
    if (i->ray) s += (i->runs.empty() ? "" : ",") + i->ray->str() + "-inf";
    return s;
  }
  return std::get<Generated>(rep_).gen->describe();
}

const std::vector<Natural>& IntegerSet::elements() const {
  if (auto* e = std::get_if<Explicit>(&rep_)) return e->values;
  throw std::logic_error("elements() on a non-explicit set");
}

const IntervalList& IntegerSet::intervals() const {
  if (auto* i = std::get_if<Intervals>(&rep_)) return i->runs;
  throw std::logic_error("intervals() on a non-interval set");
}

const std::optional<Natural>& IntegerSet::ray_start() const {
  if (auto* i = std::get_if<Intervals>(&rep_)) return i->ray;
  throw std::logic_error("ray_start() on a non-interval set");
}

const std::shared_ptr<const Generator>& IntegerSet::generator() const {
  if (auto* g = std::get_if<Generated>(&rep_)) return g->gen;
  throw std::logic_error("generator() on a non-generator set");
}

// ---------------------------------------------------------------------------
// Set algebra

CanonicalForm canonical(const IntegerSet& a) {
  switch (a.kind()) {
    case SetKind::ExplicitFinite:
      return {runs_of_sorted(a.elements()), std::nullopt};
    case SetKind::IntervalUnion:
      return {a.intervals(), a.ray_start()};
    default:
      throw InvalidArgument("canonical form of generator-backed set '" + a.describe() + "'");
  }
}

bool same_elements(const IntegerSet& a, const IntegerSet& b) { return canonical(a) == canonical(b); }

namespace {

enum class Op { Union, Intersection, Difference };

// Beyond the largest finite endpoint both operands are constant, so a ray can
// be replaced by a bounded run ending at a sentinel and restored afterwards.
IntegerSet combine_canonical(const CanonicalForm& a, const CanonicalForm& b, Op op) {
  Natural top = 0;
  for (const auto* f : {&a, &b}) {
    if (!f->runs.empty()) top = std::max(top, f->runs.back().hi);
    if (f->ray) top = std::max(top, *f->ray);
  }
  const Natural sentinel = top + 2;
  auto expand = [&](const CanonicalForm& f) {
    IntervalList runs = f.runs;
    if (f.ray) runs.push_back({*f.ray, sentinel});
    return runs;
  };
  const IntervalList x = expand(a);
  const IntervalList y = expand(b);
  IntervalList r;
  switch (op) {
    case Op::Union:
      r = unite(x, y);
      break;
    case Op::Intersection:
      r = intersect(x, y);
      break;
    case Op::Difference:
      r = subtract(x, y);
      break;
  }
  std::optional<Natural> ray;
  if (!r.empty() && r.back().hi == sentinel) {
    ray = r.back().lo;
    r.pop_back();
  }
  return IntegerSet::from_intervals(std::move(r), ray);
}

bool finite_plain(const IntegerSet& s) { return s.kind() != SetKind::GeneratorBacked && s.finite_support(); }

IntegerSet combine(const IntegerSet& a, const IntegerSet& b, Op op) {
  // A finite left operand (either one for intersections) bounds the result,
  // so the generator side only needs to be read up to its maximum.
  if (op != Op::Union && (a.kind() == SetKind::GeneratorBacked) != (b.kind() == SetKind::GeneratorBacked)) {
    const IntegerSet* fin = finite_plain(a) ? &a : (op == Op::Intersection && finite_plain(b)) ? &b : nullptr;
    if (fin) {
      const auto top = fin->support_max();
      if (!top) return IntegerSet();
      const IntegerSet& gen = fin == &a ? b : a;
      const IntegerSet bounded = restrict(gen, *top);
      return fin == &a ? combine(a, bounded, op) : combine(bounded, b, op);
    }
  }
  if (a.kind() == SetKind::GeneratorBacked || b.kind() == SetKind::GeneratorBacked) {
    detail::CombineOp cop = op == Op::Union          ? detail::CombineOp::Union
                            : op == Op::Intersection ? detail::CombineOp::Intersection
                                                     : detail::CombineOp::Difference;
    return IntegerSet::from_generator(std::make_shared<detail::CombineGenerator>(cop, a, b));
  }
  if (a.kind() == SetKind::ExplicitFinite && b.kind() == SetKind::ExplicitFinite) {
    const auto& x = a.elements();
    const auto& y = b.elements();
    std::vector<Natural> out;
    switch (op) {
      case Op::Union:
        std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
        break;
      case Op::Intersection:
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
        break;
      case Op::Difference:
        std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
        break;
    }
    return IntegerSet::from_sorted(std::move(out));
  }
  return combine_canonical(canonical(a), canonical(b), op);
}

}  // namespace

IntegerSet set_union(const IntegerSet& a, const IntegerSet& b) { return combine(a, b, Op::Union); }

IntegerSet set_intersection(const IntegerSet& a, const IntegerSet& b) {
  return combine(a, b, Op::Intersection);
}

IntegerSet set_difference(const IntegerSet& a, const IntegerSet& b) {
  return combine(a, b, Op::Difference);
}

IntegerSet complement(const IntegerSet& a) { return set_difference(IntegerSet::everything(), a); }

IntegerSet tail(const IntegerSet& a, const Natural& m) {
  switch (a.kind()) {
    case SetKind::ExplicitFinite: {
      const auto& v = a.elements();
      return IntegerSet::from_sorted(
          std::vector<Natural>(std::upper_bound(v.begin(), v.end(), m), v.end()));
    }
    case SetKind::IntervalUnion: {
      auto runs = clip(a.intervals(), m + 1, std::max(m + 1, a.intervals().empty()
                                                                 ? Natural(0)
                                                                 : a.intervals().back().hi));
      std::optional<Natural> ray = a.ray_start();
      if (ray && *ray <= m) ray = m + 1;
      return IntegerSet::from_intervals(std::move(runs), ray);
    }
    default:
      return IntegerSet::from_generator(std::make_shared<detail::TailGenerator>(a, m));
  }
}

IntegerSet restrict(const IntegerSet& a, const Natural& h) {
  if (a.kind() == SetKind::ExplicitFinite) {
    const auto& v = a.elements();
    return IntegerSet::from_sorted(
        std::vector<Natural>(v.begin(), std::upper_bound(v.begin(), v.end(), h)));
  }
  if (h < 0) return IntegerSet();
  return IntegerSet::from_intervals(a.runs_in(0, h));
}

std::vector<Natural> enumerate_up_to(const IntegerSet& a, const Natural& h) {
  std::vector<Natural> out;
  if (h < 0) return out;
  for (const auto& r : a.runs_in(0, h)) {
    for (Natural x = r.lo; x <= r.hi; ++x) out.push_back(x);
  }
  return out;
}

IntegerSet localized(const IntegerSet& a, const Natural& lo, const Natural& hi) {
  if (a.fast_count()) return a;
  return IntegerSet::from_intervals(a.runs_in(lo, hi));
}

}  // namespace gdens
