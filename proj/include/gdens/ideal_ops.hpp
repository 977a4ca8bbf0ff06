#ifndef GDENS_IDEAL_OPS_HPP
#define GDENS_IDEAL_OPS_HPP

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gdens/errors.hpp"
#include "gdens/verdict.hpp"

namespace gdens {

enum class SequenceKind { Reciprocal, Characteristic, Constant, FileBacked };

/// A real sequence (x_k), k >= 0, with exact rational values.
class RealSequence {
 public:
  /// x_k = 1/(k+1).
  static RealSequence reciprocal();
  /// x_k = 1 if k ∈ A else 0.
  static RealSequence characteristic(IntegerSet a);
  static RealSequence constant(Rational c);
  /// Finite list; evaluation past the end is an error, never zero-padding.
  static RealSequence from_values(std::vector<Rational> values);

  SequenceKind kind() const { return kind_; }
  Rational at(const Natural& k) const;
  std::optional<Index> last_index() const;
  std::string describe() const;

  const std::vector<Rational>& values() const { return values_; }
  const IntegerSet& set() const { return set_; }
  const Rational& constant_value() const { return constant_; }

 private:
  SequenceKind kind_ = SequenceKind::Constant;
  IntegerSet set_;
  Rational constant_;
  std::vector<Rational> values_;
};

// ".seq" format: one rational per line ("p/q", "-p/q" or an integer); the
// value on line i is x_(i-1). No comments or blank lines.
RealSequence parse_seq(std::istream& in, const std::string& source = "<seq>");
RealSequence read_seq(const std::filesystem::path& path);
void write_seq(std::ostream& out, const std::vector<Rational>& values);

/// {k : |x_k - L| >= eps}, restricted to [0, h] when h is given.
///
/// Closed-form sequences yield exact (possibly infinite) sets when h is
/// absent. File-backed sequences are evaluated on [0, h] (default: the whole
/// file) and throw OutOfRange when h passes the end.
IntegerSet exceedance_set(const RealSequence& x, const Rational& limit, const Rational& eps,
                          const std::optional<Natural>& h = std::nullopt);

enum class Convergence { Converges, DoesNotConverge, Undetermined };

std::string_view to_string(Convergence c);

struct EpsilonVerdict {
  Rational eps;
  Verdict verdict;
};

struct ConvergenceReport {
  std::vector<EpsilonVerdict> per_eps;
  /// The weakest per-eps verdict decides.
  Convergence overall = Convergence::Undetermined;
  /// First eps whose verdict decided `overall`.
  std::optional<Rational> bottleneck;
};

ConvergenceReport i_converges(const WindowFamily& family, const RealSequence& x, const Rational& limit,
                              const std::vector<Rational>& epsilons, const TrendPolicy& policy = {});

class PseudoUnionFailure : public Error {
 public:
  PseudoUnionFailure(std::size_t member, const std::string& what) : Error(what), member_(member) {}
  std::size_t member() const { return member_; }

 private:
  std::size_t member_;
};

std::vector<Natural> default_m_samples();

struct PseudoUnionConfig {
  /// Tolerance for member i (counted from 1); default 2^-i.
  std::function<Rational(std::size_t)> tolerance = [](std::size_t i) {
    return Rational(Natural(1), pow2(static_cast<unsigned>(i)));
  };
  /// Candidate cut points m, ascending.
  std::vector<Natural> m_samples = default_m_samples();
  PhiScan scan;
};

struct PseudoUnion {
  IntegerSet set;
  /// n_i: least sampled m with φ(A_i ∖ [0, m]) <= tolerance(i).
  std::vector<Natural> thresholds;
  std::vector<PhiValue> phi_at_threshold;
};

/// P = ⋃_i (A_i ∖ [0, n_i]); each A_i ∖ P ⊆ [0, n_i] by construction.
/// Throws PseudoUnionFailure naming the first member that never reaches its
/// tolerance on the sampled cut points.
PseudoUnion pseudo_union(const WindowFamily& family, const std::vector<IntegerSet>& members,
                         const PseudoUnionConfig& config = {});

struct WitnessDensity {
  Index n = 0;
  Index big_n = 0;  // N = n!
  Rational value;
};

struct WitnessReport {
  IntegerSet set;
  /// μ_n(A) under family_b for n = 1..mu_to.
  Trajectory mu_b;
  /// μ_N(A) under family_a at N = n!, n = 1..density_to.
  std::vector<WitnessDensity> densities_a;
  bool mu_b_identically_one = false;
  bool densities_strictly_decreasing_from_3 = false;
};

/// A = ⋃_n F_n of family_b, examined under both families.
WitnessReport separating_witness(const WindowFamily& family_a = WindowFamily::classical_prefix(),
                                 const WindowFamily& family_b = WindowFamily::factorial_blocks(),
                                 Index mu_to = 20, Index density_to = 10);

}  // namespace gdens

#endif
