#ifndef GDENS_SRC_GENERATORS_IMPL_HPP
#define GDENS_SRC_GENERATORS_IMPL_HPP

#include <functional>

#include "gdens/integer_set.hpp"

namespace gdens::detail {

/// {j^p : j >= 0}.
class PowerGenerator final : public Generator {
 public:
  explicit PowerGenerator(unsigned exponent) : exponent_(exponent) {}
  std::string describe() const override;
  bool contains(const Natural& x) const override;
  IntervalList runs_in(const Natural& lo, const Natural& hi) const override;
  Natural count_in(const Natural& lo, const Natural& hi) const override;
  bool fast_count() const override { return true; }

 private:
  unsigned exponent_;
};

class ArithmeticGenerator final : public Generator {
 public:
  ArithmeticGenerator(Natural start, Natural step) : start_(std::move(start)), step_(std::move(step)) {}
  std::string describe() const override;
  bool contains(const Natural& x) const override;
  IntervalList runs_in(const Natural& lo, const Natural& hi) const override;
  Natural count_in(const Natural& lo, const Natural& hi) const override;
  bool fast_count() const override { return true; }

 private:
  // Range of j with lo <= start + step*j <= hi; empty when first > last.
  std::pair<Natural, Natural> index_range(const Natural& lo, const Natural& hi) const;
  Natural start_;
  Natural step_;
};

class PredicateGenerator final : public Generator {
 public:
  PredicateGenerator(std::string name, std::function<bool(const Natural&)> pred, Natural horizon)
      : name_(std::move(name)), pred_(std::move(pred)), horizon_(std::move(horizon)) {}
  std::string describe() const override { return name_; }
  bool contains(const Natural& x) const override { return pred_(x); }
  std::optional<Natural> horizon() const override { return horizon_; }

 private:
  std::string name_;
  std::function<bool(const Natural&)> pred_;
  Natural horizon_;
};

/// Elements of `base` strictly greater than `cutoff`.
class TailGenerator final : public Generator {
 public:
  TailGenerator(IntegerSet base, Natural cutoff) : base_(std::move(base)), cutoff_(std::move(cutoff)) {}
  std::string describe() const override;
  bool contains(const Natural& x) const override;
  std::optional<Natural> horizon() const override { return base_.horizon(); }
  IntervalList runs_in(const Natural& lo, const Natural& hi) const override;
  Natural count_in(const Natural& lo, const Natural& hi) const override;
  bool fast_count() const override { return base_.fast_count(); }
  std::optional<WindowUnionTag> window_union() const override;

 private:
  IntegerSet base_;
  Natural cutoff_;
};

enum class CombineOp { Union, Intersection, Difference };

class CombineGenerator final : public Generator {
 public:
  CombineGenerator(CombineOp op, IntegerSet a, IntegerSet b)
      : op_(op), a_(std::move(a)), b_(std::move(b)) {}
  std::string describe() const override;
  bool contains(const Natural& x) const override;
  std::optional<Natural> horizon() const override;
  IntervalList runs_in(const Natural& lo, const Natural& hi) const override;
  std::optional<WindowUnionTag> window_union() const override;

 private:
  CombineOp op_;
  IntegerSet a_;
  IntegerSet b_;
};

}  // namespace gdens::detail

#endif
