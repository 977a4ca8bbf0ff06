#include <algorithm>

#include "generators_impl.hpp"
#include "gdens/errors.hpp"

namespace gdens {
namespace detail {

std::string PowerGenerator::describe() const {
  if (exponent_ == 2) return "squares";
  if (exponent_ == 3) return "cubes";
  return "powers:" + std::to_string(exponent_);
}

bool PowerGenerator::contains(const Natural& x) const {
  if (x < 0) return false;
  const Natural r = integer_root(x, exponent_);
  return boost::multiprecision::pow(r, exponent_) == x;
}

Natural PowerGenerator::count_in(const Natural& lo, const Natural& hi) const {
  if (lo > hi) return 0;
  return integer_root(hi, exponent_) - integer_root(lo - 1, exponent_);
}

IntervalList PowerGenerator::runs_in(const Natural& lo, const Natural& hi) const {
  IntervalList out;
  if (lo > hi) return out;
  for (Natural j = integer_root(lo - 1, exponent_) + 1;; ++j) {
    Natural v = boost::multiprecision::pow(j, exponent_);
    if (v > hi) break;
    if (!out.empty() && out.back().hi + 1 == v) {
      out.back().hi = v;
    } else {
      out.push_back({v, v});
    }
  }
  return out;
}

std::string ArithmeticGenerator::describe() const {
  return "arith:" + start_.str() + "," + step_.str();
}

bool ArithmeticGenerator::contains(const Natural& x) const {
  if (x < start_) return false;
  if (step_ == 0) return x == start_;
  return (x - start_) % step_ == 0;
}

std::pair<Natural, Natural> ArithmeticGenerator::index_range(const Natural& lo,
                                                             const Natural& hi) const {
  if (hi < start_ || lo > hi) return {1, 0};
  if (step_ == 0) return lo <= start_ ? std::pair<Natural, Natural>{0, 0} : std::pair<Natural, Natural>{1, 0};
  const Natural first = lo <= start_ ? Natural(0) : ceil_of(Rational(lo - start_, step_));
  const Natural last = (hi - start_) / step_;
  return {first, last};
}

Natural ArithmeticGenerator::count_in(const Natural& lo, const Natural& hi) const {
  const auto [first, last] = index_range(lo, hi);
  return first > last ? Natural(0) : Natural(last - first + 1);
}

IntervalList ArithmeticGenerator::runs_in(const Natural& lo, const Natural& hi) const {
  const auto [first, last] = index_range(lo, hi);
  if (first > last) return {};
  if (step_ == 1) return {{start_ + first, start_ + last}};
  IntervalList out;
  for (Natural j = first; j <= last; ++j) {
    const Natural v = start_ + step_ * j;
    out.push_back({v, v});
  }
  return out;
}

std::string TailGenerator::describe() const {
  return "tail(" + base_.describe() + ", >" + cutoff_.str() + ")";
}

bool TailGenerator::contains(const Natural& x) const { return x > cutoff_ && base_.contains(x); }

IntervalList TailGenerator::runs_in(const Natural& lo, const Natural& hi) const {
  return base_.runs_in(std::max(lo, Natural(cutoff_ + 1)), hi);
}

Natural TailGenerator::count_in(const Natural& lo, const Natural& hi) const {
  return base_.count_in(std::max(lo, Natural(cutoff_ + 1)), hi);
}

std::optional<WindowUnionTag> TailGenerator::window_union() const {
  auto tag = base_.window_union();
  if (tag && (!tag->at_most || *tag->at_most < cutoff_)) tag->at_most = cutoff_;
  return tag;
}

std::string CombineGenerator::describe() const {
  const char* name = op_ == CombineOp::Union          ? "union"
                     : op_ == CombineOp::Intersection ? "intersection"
                                                      : "difference";
  return std::string(name) + "(" + a_.describe() + ", " + b_.describe() + ")";
}

bool CombineGenerator::contains(const Natural& x) const {
  switch (op_) {
    case CombineOp::Union:
      return a_.contains(x) || b_.contains(x);
    case CombineOp::Intersection:
      return a_.contains(x) && b_.contains(x);
    default:
      return a_.contains(x) && !b_.contains(x);
  }
}

std::optional<Natural> CombineGenerator::horizon() const {
  const auto ha = a_.horizon();
  const auto hb = b_.horizon();
  if (!ha) return hb;
  if (!hb) return ha;
  return std::min(*ha, *hb);
}

IntervalList CombineGenerator::runs_in(const Natural& lo, const Natural& hi) const {
  const IntervalList x = a_.runs_in(lo, hi);
  const IntervalList y = b_.runs_in(lo, hi);
  switch (op_) {
    case CombineOp::Union:
      return unite(x, y);
    case CombineOp::Intersection:
      return intersect(x, y);
    default:
      return subtract(x, y);
  }
}

std::optional<WindowUnionTag> CombineGenerator::window_union() const {
  if (op_ != CombineOp::Union) return std::nullopt;
  auto ta = a_.window_union();
  auto tb = b_.window_union();
  if (!ta) return tb;
  if (!tb) return ta;
  // Either side works; keep the one with the smaller cutoff.
  if (!ta->at_most) return ta;
  if (!tb->at_most) return tb;
  return *ta->at_most <= *tb->at_most ? ta : tb;
}

}  // namespace detail

IntegerSet squares() { return IntegerSet::from_generator(std::make_shared<detail::PowerGenerator>(2)); }

IntegerSet cubes() { return IntegerSet::from_generator(std::make_shared<detail::PowerGenerator>(3)); }

IntegerSet arithmetic(const Natural& start, const Natural& step) {
  if (start < 0 || step < 0) throw InvalidArgument("arithmetic progression needs nonnegative start and step");
  if (step == 0) return IntegerSet::from_sorted({start});
  return IntegerSet::from_generator(std::make_shared<detail::ArithmeticGenerator>(start, step));
}

IntegerSet predicate_set(std::string name, std::function<bool(const Natural&)> pred,
                         const Natural& horizon) {
  if (horizon < 0) throw InvalidArgument("negative horizon");
  return IntegerSet::from_generator(
      std::make_shared<detail::PredicateGenerator>(std::move(name), std::move(pred), horizon));
}

}  // namespace gdens
