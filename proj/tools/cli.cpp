#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gdens/density.hpp"
#include "gdens/errors.hpp"
#include "gdens/ideal_ops.hpp"
#include "gdens/iset_io.hpp"
#include "gdens/partition.hpp"
#include "gdens/verdict.hpp"

namespace gdens::cli {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::pair<Index, Index> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const Index v = parse_index(text);
    return {v, v};
  }
  const Index lo = parse_index(text.substr(0, dots));
  const Index hi = parse_index(text.substr(dots + 2));
  if (lo > hi) throw InvalidArgument("empty range '" + std::string(text) + "'");
  return {lo, hi};
}

// "x", "2^e", "e!".
Natural parse_point(std::string_view item) {
  if (item.size() > 2 && item.substr(0, 2) == "2^") {
    return pow2(static_cast<unsigned>(parse_index(item.substr(2))));
  }
  if (!item.empty() && item.back() == '!') return factorial(parse_index(item.substr(0, item.size() - 1)));
  return parse_natural(item);
}

// Comma list of points; "2^a..2^b" expands to every power in between.
std::vector<Natural> parse_points(std::string_view text) {
  std::vector<Natural> out;
  for (auto item : split(text, ',')) {
    const auto dots = item.find("..");
    if (dots != std::string_view::npos && item.substr(0, 2) == "2^") {
      const auto [a, b] = parse_range(std::string(item.substr(2, dots - 2)) + ".." +
                                      std::string(item.substr(dots + 4)));
      for (Index e = a; e <= b; ++e) out.push_back(pow2(static_cast<unsigned>(e)));
    } else {
      out.push_back(parse_point(item));
    }
  }
  return out;
}

std::vector<Rational> parse_rationals(std::string_view text) {
  std::vector<Rational> out;
  for (auto item : split(text, ',')) out.push_back(parse_rational(item));
  return out;
}

RealSequence parse_seq_spec(std::string_view spec, const WindowFamily& family) {
  if (spec == "reciprocal") return RealSequence::reciprocal();
  if (spec.substr(0, 5) == "char:") return RealSequence::characteristic(parse_set_spec(spec.substr(5), family));
  if (spec.substr(0, 6) == "const:") return RealSequence::constant(parse_rational(spec.substr(6)));
  if (spec.substr(0, 5) == "file:") return read_seq(std::string(spec.substr(5)));
  throw InvalidArgument("unknown sequence '" + std::string(spec) + "'");
}

PartitionMode parse_mode(std::string_view text) {
  if (text == "literal") return PartitionMode::Literal;
  if (text == "disjointified") return PartitionMode::Disjointified;
  throw InvalidArgument("unknown partition mode '" + std::string(text) + "'");
}

std::string exactness_label(const PhiValue& v) {
  if (v.exactness == Exactness::Exact) return "Exact";
  return "LowerBoundAtHorizon(n=" + std::to_string(v.n_used) + ")";
}

struct Header {
  explicit Header(std::string c) : command(std::move(c)) {}

  std::string command;
  std::vector<std::pair<std::string, std::string>> fields;

  Header& add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }

  void print(std::ostream& out) const {
    out << "# gdens " << command;
    for (const auto& [k, v] : fields) out << ' ' << k << '=' << v;
    out << '\n';
  }
};

struct Options {
  std::string family = "classical";
  std::string family_b = "factorial";
  std::string set;
  std::string n_range = "1..20";
  std::string points;
  std::string seq = "reciprocal";
  std::string limit = "0";
  std::string eps = "1/2,1/10,1/100";
  std::vector<std::string> members;
  std::string out_path;
  std::string dump;
  std::string mode = "disjointified";
  std::string horizon;
  std::string k_window;
  std::vector<std::string> block_files;
  Index scan = 0;
  Index cap = default_scan_cap();
  Index k_from = 4;
  Index k_to = 16;
  std::string rho = "3/4";
  std::string delta = "1/100";
  Index index_limit = 0;
  Index n_max = 4;
  Index k_max = 16;
  Index mu_to = 20;
  Index density_to = 10;
};

PhiScan scan_of(const Options& o) {
  PhiScan s;
  if (o.scan) s.horizon = o.scan;
  s.cap = o.cap;
  return s;
}

TrendPolicy policy_of(const Options& o) {
  TrendPolicy p;
  p.k_from = static_cast<unsigned>(o.k_from);
  p.k_to = static_cast<unsigned>(o.k_to);
  p.rho = parse_rational(o.rho);
  p.delta = parse_rational(o.delta);
  if (p.rho <= 0 || p.rho >= 1) throw InvalidArgument("--rho must lie in (0, 1)");
  if (o.index_limit) p.index_limit = o.index_limit;
  p.cap = o.cap;
  return p;
}

void add_policy(Header& h, const TrendPolicy& p, const WindowFamily& family) {
  h.add("k_from", std::to_string(p.k_from))
      .add("k_to", std::to_string(p.k_to))
      .add("rho", render_fraction(p.rho))
      .add("delta", render_fraction(p.delta))
      .add("index_limit", std::to_string(family.clamp(p.index_limit.value_or(family.default_scan()))));
}

void print_warnings(std::ostream& out, const WindowFamily& family) {
  for (const auto& w : family.warnings()) out << "# warning: " << w << '\n';
}

int verdict_exit(const Verdict& v) { return v.kind == VerdictKind::Inconclusive ? kInconclusive : kOk; }

// ---------------------------------------------------------------------------

int cmd_mu(const Options& o, std::ostream& out) {
  const auto family = parse_family_spec(o.family);
  const auto set = parse_set_spec(o.set.empty() ? "blocks" : o.set, family);
  const auto [lo, hi] = parse_range(o.n_range);
  Header{"mu"}.add("family", family.key()).add("set", set.describe()).add("n", o.n_range).print(out);
  print_warnings(out, family);
  write_trajectory_csv(out, mu_trajectory(family, set, lo, family.clamp(hi)));
  return kOk;
}

int cmd_phi(const Options& o, std::ostream& out) {
  const auto family = parse_family_spec(o.family);
  const auto set = parse_set_spec(o.set.empty() ? "empty" : o.set, family);
  const auto scan = scan_of(o);
  Header{"phi"}
      .add("family", family.key())
      .add("set", set.describe())
      .add("scan", std::to_string(family.clamp(scan.horizon.value_or(family.default_scan()))))
      .add("cap", std::to_string(scan.cap))
      .print(out);
  print_warnings(out, family);
  const auto v = phi(family, set, scan);
  out << render_fraction(v.value) << ' ' << exactness_label(v) << '\n';
  out << "# argmax=" << (v.argmax ? std::to_string(*v.argmax) : std::string("none"))
      << " n_used=" << v.n_used << " decimal=" << render_decimal(v.value) << '\n';
  return kOk;
}

int cmd_norm(const Options& o, std::ostream& out) {
  const auto family = parse_family_spec(o.family);
  const auto set = parse_set_spec(o.set.empty() ? "empty" : o.set, family);
  const auto [lo, hi] = parse_range(o.n_range);
  Header{"norm"}.add("family", family.key()).add("set", set.describe()).add("n", o.n_range).print(out);
  print_warnings(out, family);
  const auto w = windowed_max(family, set, lo, family.clamp(hi));
  out << render_fraction(w.value) << " window=[" << w.lo << "," << w.hi << "] argmax=" << w.argmax
      << " decimal=" << render_decimal(w.value) << '\n';
  return kOk;
}

int cmd_exh(const Options& o, std::ostream& out) {
  const auto family = parse_family_spec(o.family);
  const auto set = parse_set_spec(o.set.empty() ? "empty" : o.set, family);
  const auto points = parse_points(o.points.empty() ? "0,1,2,2^2..2^10" : o.points);
  const auto scan = scan_of(o);
  Header{"exh"}
      .add("family", family.key())
      .add("set", set.describe())
      .add("scan", set.finite_support()
                       ? std::string("exact")
                       : std::to_string(family.clamp(scan.horizon.value_or(family.default_scan()))))
      .add("cap", std::to_string(scan.cap))
      .print(out);
  print_warnings(out, family);
  const auto t = exh_trajectory(family, set, points, scan);
  const bool all_exact = std::all_of(t.samples.begin(), t.samples.end(), [](const Sample& s) { return s.exact; });
  out << "# exactness=" << (all_exact ? "Exact" : "LowerBoundAtHorizon") << '\n';
  write_trajectory_csv(out, t);
  return kOk;
}

int cmd_member(const Options& o, std::ostream& out) {
  const auto family = parse_family_spec(o.family);
  const auto set = parse_set_spec(o.set.empty() ? "empty" : o.set, family);
  const auto policy = policy_of(o);
  Header h{"member"};
  h.add("family", family.key()).add("set", set.describe());
  add_policy(h, policy, family);
  h.print(out);
  print_warnings(out, family);
  const auto v = member_verdict(family, set, policy);
  out << verdict_record(v) << '\n';
  return verdict_exit(v);
}

int cmd_converge(const Options& o, std::ostream& out) {
  const auto family = parse_family_spec(o.family);
  const auto x = parse_seq_spec(o.seq, family);
  const auto limit = parse_rational(o.limit);
  const auto eps = parse_rationals(o.eps);
  const auto policy = policy_of(o);
  Header h{"converge"};
  h.add("family", family.key()).add("seq", x.describe()).add("limit", render_fraction(limit)).add("eps", o.eps);
  add_policy(h, policy, family);
  h.print(out);
  print_warnings(out, family);
  const auto report = i_converges(family, x, limit, eps, policy);
  for (const auto& e : report.per_eps) out << "eps=" << render_fraction(e.eps) << ' ' << verdict_record(e.verdict) << '\n';
  out << "overall=" << to_string(report.overall);
  if (report.bottleneck) out << " bottleneck_eps=" << render_fraction(*report.bottleneck);
  out << '\n';
  return report.overall == Convergence::Undetermined ? kInconclusive : kOk;
}

int cmd_pseudo_union(const Options& o, std::ostream& out) {
  const auto family = parse_family_spec(o.family);
  std::vector<IntegerSet> members;
  for (const auto& m : o.members) members.push_back(parse_set_spec(m, family));
  if (members.empty()) throw InvalidArgument("pseudo-union needs at least one --member");
  PseudoUnionConfig config;
  config.scan = scan_of(o);
  const auto points = parse_points(o.points.empty() ? "0,1,2,2^2..2^14" : o.points);
  Header h{"pseudo-union"};
  h.add("family", family.key());
  for (const auto& m : members) h.add("member", m.describe());
  h.add("tolerance", "2^-i")
      .add("scan", std::to_string(family.clamp(config.scan.horizon.value_or(family.default_scan()))))
      .add("cap", std::to_string(config.scan.cap))
      .print(out);
  print_warnings(out, family);
  const auto result = pseudo_union(family, members, config);
  out << "member,threshold,phi_num,phi_den,exactness\n";
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& v = result.phi_at_threshold[i];
    out << i << ',' << result.thresholds[i] << ',' << numerator(v.value) << ',' << denominator(v.value) << ','
        << exactness_label(v) << '\n';
  }
  out << "# exh trajectory of P = " << result.set.describe() << '\n';
  write_trajectory_csv(out, exh_trajectory(family, result.set, points, config.scan));
  if (!o.dump.empty()) {
    const Natural h_dump = o.horizon.empty() ? Natural(1 << 16) : parse_natural(o.horizon);
    write_iset_file(o.dump, restrict(result.set, h_dump));
    out << "# wrote P restricted to [0," << h_dump << "] to " << o.dump << '\n';
  }
  return kOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const auto family_a = parse_family_spec(o.family);
  const auto family_b = parse_family_spec(o.family_b);
  Header{"witness"}
      .add("family_a", family_a.key())
      .add("family_b", family_b.key())
      .add("mu_to", std::to_string(o.mu_to))
      .add("density_to", std::to_string(o.density_to))
      .print(out);
  const auto report = separating_witness(family_a, family_b, o.mu_to, o.density_to);
  out << "# A = " << report.set.describe() << "; mu_n(A) under " << family_b.key() << '\n';
  write_trajectory_csv(out, report.mu_b);
  out << "# mu_N(A) under " << family_a.key() << " at N = n!\n";
  out << "n,N,numerator,denominator,decimal\n";
  for (const auto& d : report.densities_a) {
    out << d.n << ',' << d.big_n << ',' << numerator(d.value) << ',' << denominator(d.value) << ','
        << render_decimal(d.value) << '\n';
  }
  out << "mu_b_identically_one=" << (report.mu_b_identically_one ? "true" : "false") << '\n';
  out << "densities_strictly_decreasing_from_3=" << (report.densities_strictly_decreasing_from_3 ? "true" : "false")
      << '\n';
  return kOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const auto family_a = parse_family_spec(o.family);
  const auto family_b = parse_family_spec(o.family_b);
  const auto set = parse_set_spec(o.set.empty() ? "blocks" : o.set, family_b);
  const auto [lo, hi] = parse_range(o.n_range);
  const auto policy = policy_of(o);
  Header{"compare"}
      .add("family_a", family_a.key())
      .add("family_b", family_b.key())
      .add("set", set.describe())
      .add("n", o.n_range)
      .print(out);
  const auto ta = mu_trajectory(family_a, set, lo, family_a.clamp(hi));
  const auto tb = mu_trajectory(family_b, set, lo, family_b.clamp(hi));
  out << "index,a_numerator,a_denominator,b_numerator,b_denominator\n";
  for (std::size_t i = 0; i < std::min(ta.samples.size(), tb.samples.size()); ++i) {
    out << ta.samples[i].index << ',' << numerator(ta.samples[i].value) << ',' << denominator(ta.samples[i].value)
        << ',' << numerator(tb.samples[i].value) << ',' << denominator(tb.samples[i].value) << '\n';
  }
  const auto va = member_verdict(family_a, set, policy);
  const auto vb = member_verdict(family_b, set, policy);
  out << "verdict_a " << verdict_record(va) << '\n';
  out << "verdict_b " << verdict_record(vb) << '\n';
  return (va.kind == VerdictKind::Inconclusive || vb.kind == VerdictKind::Inconclusive) ? kInconclusive : kOk;
}

struct PartitionArgs {
  WindowFamily family;
  PartitionReport report;
};

PartitionArgs build_from(const Options& o) {
  auto family = parse_family_spec(o.family);
  const Index k_max = family.clamp(o.k_max);
  const Natural h = o.horizon.empty() ? family.window(k_max).max_element() : parse_point(o.horizon);
  auto report = build_partition(family, static_cast<unsigned>(o.n_max), k_max, h, parse_mode(o.mode));
  return {std::move(family), std::move(report)};
}

Header partition_header(const std::string& sub, const PartitionArgs& p) {
  Header h{"partition " + sub};
  h.add("family", p.family.key())
      .add("mode", std::string(to_string(p.report.mode)))
      .add("n_max", std::to_string(p.report.n_max))
      .add("k_max", std::to_string(p.report.k_max))
      .add("H", p.report.horizon.str());
  return h;
}

void print_check(std::ostream& out, const PartitionCheck& c) {
  out << "pairwise_disjoint=" << (c.pairwise_disjoint ? "true" : "false") << '\n';
  out << "covers=" << (c.covers ? "true" : "false") << '\n';
  out << "overlap_witness=" << (c.overlap_witness ? c.overlap_witness->str() : std::string("none")) << '\n';
  out << "gap_witness=" << (c.gap_witness ? c.gap_witness->str() : std::string("none")) << '\n';
}

int cmd_partition_build(const Options& o, std::ostream& out) {
  const auto p = build_from(o);
  partition_header("build", p).print(out);
  out << "n,block_size,runs\n";
  for (std::size_t n = 0; n < p.report.blocks.size(); ++n) {
    const auto& b = p.report.blocks[n];
    out << n << ',' << b.cardinality() << ',' << canonical(b).runs.size() << '\n';
  }
  print_check(out, p.report.check);
  const auto& d = p.report.degeneracy;
  out << "degenerate=" << (d.degenerate ? "true" : "false") << '\n';
  out << "p0_initial_segment_end="
      << (d.p0_initial_segment_end ? d.p0_initial_segment_end->str() : std::string("none")) << '\n';
  out << "swallowed_windows=" << d.swallowed_windows.size() << '\n';
  out << "slices_separated=" << (p.report.slices_separated ? "true" : "false") << '\n';
  if (!o.dump.empty()) {
    std::filesystem::create_directories(o.dump);
    for (std::size_t n = 0; n < p.report.blocks.size(); ++n) {
      const auto path = std::filesystem::path(o.dump) / ("G_" + std::to_string(n) + ".iset");
      write_iset_file(path, p.report.blocks[n]);
      out << "# wrote " << path.string() << '\n';
    }
  }
  return kOk;
}

int cmd_partition_verify(const Options& o, std::ostream& out) {
  if (!o.block_files.empty()) {
    if (o.horizon.empty()) throw InvalidArgument("--horizon is required with --blocks");
    const Natural h = parse_point(o.horizon);
    std::vector<IntegerSet> blocks;
    for (const auto& f : o.block_files) blocks.push_back(read_iset(f));
    Header{"partition verify"}.add("blocks", std::to_string(blocks.size())).add("H", h.str()).print(out);
    print_check(out, verify_partition(blocks, h));
    return kOk;
  }
  const auto p = build_from(o);
  partition_header("verify", p).print(out);
  print_check(out, verify_partition(p.report.blocks, p.report.horizon));
  return kOk;
}

int cmd_partition_norms(const Options& o, std::ostream& out) {
  const auto p = build_from(o);
  Index k_lo = p.report.k_max / 2, k_hi = p.report.k_max;
  if (!o.k_window.empty()) std::tie(k_lo, k_hi) = parse_range(o.k_window);
  auto h = partition_header("norms", p);
  h.add("k_window", std::to_string(k_lo) + ".." + std::to_string(k_hi)).print(out);
  write_partition_csv(out, block_norm_report(p.family, p.report, k_lo, k_hi));
  return kOk;
}

int cmd_export(const std::string& what, const Options& o, std::ostream& out) {
  const auto family = parse_family_spec(o.family);
  if (what == "family") {
    write_family(out, family, family.clamp(o.n_max));
  } else if (what == "set") {
    const auto set = parse_set_spec(o.set.empty() ? "empty" : o.set, family);
    if (set.finite_support() && o.horizon.empty()) {
      write_iset(out, set);
    } else {
      write_iset(out, restrict(set, o.horizon.empty() ? Natural(1000) : parse_point(o.horizon)));
    }
  } else {
    const auto x = parse_seq_spec(o.seq, family);
    const Index last = x.last_index() ? std::min<Index>(*x.last_index(), o.n_max) : o.n_max;
    std::vector<Rational> values;
    for (Index k = 0; k <= last; ++k) values.push_back(x.at(k));
    write_seq(out, values);
  }
  return kOk;
}

// Writes to --out when given, otherwise into `out`.
template <typename F>
int with_output(const Options& o, std::ostream& out, F&& body) {
  if (o.out_path.empty()) return body(out);
  std::ofstream file(o.out_path);
  if (!file) throw InvalidArgument("cannot write '" + o.out_path + "'");
  return body(file);
}

}  // namespace

IntegerSet parse_set_spec(std::string_view spec, const WindowFamily& family) {
  auto body_after = [&](std::string_view prefix) { return spec.substr(prefix.size()); };
  if (spec == "empty") return IntegerSet();
  if (spec == "blocks") return window_union_set(family);
  if (spec == "squares") return squares();
  if (spec == "cubes") return cubes();
  if (spec.substr(0, 5) == "list:") {
    std::vector<Natural> values;
    for (auto item : split(body_after("list:"), ',')) values.push_back(parse_natural(item));
    return IntegerSet::from_elements(std::move(values));
  }
  if (spec.substr(0, 10) == "intervals:") {
    IntervalList runs;
    for (auto item : split(body_after("intervals:"), ',')) {
      const auto dash = item.find('-');
      if (dash == std::string_view::npos) {
        const Natural v = parse_natural(item);
        runs.push_back({v, v});
      } else {
        runs.push_back({parse_natural(item.substr(0, dash)), parse_natural(item.substr(dash + 1))});
      }
    }
    return IntegerSet::from_intervals(std::move(runs));
  }
  if (spec.substr(0, 6) == "arith:") {
    const auto parts = split(body_after("arith:"), ',');
    if (parts.size() != 2) throw InvalidArgument("arith needs 'a,d'");
    return arithmetic(parse_natural(parts[0]), parse_natural(parts[1]));
  }
  if (spec.substr(0, 5) == "file:") return read_iset(std::string(body_after("file:")));
  throw InvalidArgument("unknown set '" + std::string(spec) + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Generalized densities, the ideal I(F) and its submeasure on subsets of the integers", "gdens"};
  app.require_subcommand(1);

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "classical | factorial | file:<path>");
  };
  auto add_set = [&](CLI::App* sub) {
    sub->add_option("--set", o.set, "empty | list:a,b | intervals:a-b,c-d | blocks | squares | cubes | arith:a,d | file:<path>");
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out_path, "write output to a file"); };
  auto add_scan = [&](CLI::App* sub) {
    sub->add_option("--scan", o.scan, "last index scanned in horizon mode (family default when 0)");
    sub->add_option("--cap", o.cap, "scan cap (default $GDENS_SCAN_CAP or 10000000)");
  };
  auto add_policy_opts = [&](CLI::App* sub) {
    sub->add_option("--k-from", o.k_from, "first trend window [2^k, 2^(k+1))");
    sub->add_option("--k-to", o.k_to, "last trend window");
    sub->add_option("--rho", o.rho, "average decay factor for TrendMember");
    sub->add_option("--delta", o.delta, "lower bound for TrendNonMember");
    sub->add_option("--index-limit", o.index_limit, "clip trend windows (family default when 0)");
    sub->add_option("--cap", o.cap, "scan cap");
  };
  auto add_partition = [&](CLI::App* sub) {
    add_family(sub);
    sub->add_option("--n-max", o.n_max, "last level n");
    sub->add_option("--k-max", o.k_max, "last window index k");
    sub->add_option("--horizon", o.horizon, "H (integer, 2^e or e!); default max F_(k_max)");
    sub->add_option("--mode", o.mode, "disjointified | literal");
    add_out(sub);
  };

  auto* mu_cmd = app.add_subcommand("mu", "mu_n(A) trajectory as CSV");
  add_family(mu_cmd);
  add_set(mu_cmd);
  mu_cmd->add_option("--n", o.n_range, "index range a..b");
  add_out(mu_cmd);

  auto* phi_cmd = app.add_subcommand("phi", "phi(A) = sup_n mu_n(A)");
  add_family(phi_cmd);
  add_set(phi_cmd);
  add_scan(phi_cmd);
  add_out(phi_cmd);

  auto* norm_cmd = app.add_subcommand("norm", "windowed upper density max_{a<=n<=b} mu_n(A)");
  add_family(norm_cmd);
  add_set(norm_cmd);
  norm_cmd->add_option("--n", o.n_range, "index window a..b");
  add_out(norm_cmd);

  auto* exh_cmd = app.add_subcommand("exh", "phi(A \\ [0,m]) trajectory");
  add_family(exh_cmd);
  add_set(exh_cmd);
  exh_cmd->add_option("--m", o.points, "cut points: x, 2^e, e!, 2^a..2^b (comma separated)");
  add_scan(exh_cmd);
  add_out(exh_cmd);

  auto* member_cmd = app.add_subcommand("member", "membership verdict for I(F)");
  add_family(member_cmd);
  add_set(member_cmd);
  add_policy_opts(member_cmd);
  add_out(member_cmd);

  auto* conv_cmd = app.add_subcommand("converge", "I(F)-convergence of a sequence");
  add_family(conv_cmd);
  conv_cmd->add_option("--seq", o.seq, "reciprocal | char:<set> | const:<q> | file:<path.seq>");
  conv_cmd->add_option("--limit", o.limit, "limit L");
  conv_cmd->add_option("--eps", o.eps, "comma-separated eps list");
  add_policy_opts(conv_cmd);
  add_out(conv_cmd);

  auto* pu_cmd = app.add_subcommand("pseudo-union", "set P with every A_i \\ P finite");
  add_family(pu_cmd);
  pu_cmd->add_option("--member", o.members, "member set (repeatable)");
  pu_cmd->add_option("--m", o.points, "cut points for the exh trajectory of P");
  pu_cmd->add_option("--dump", o.dump, "write P restricted to [0, --horizon] as .iset");
  pu_cmd->add_option("--horizon", o.horizon, "restriction for --dump (default 65536)");
  add_scan(pu_cmd);
  add_out(pu_cmd);

  auto* wit_cmd = app.add_subcommand("witness", "the set of factorial blocks under both builtin families");
  wit_cmd->add_option("--family-a", o.family, "family for the densities at N = n!");
  wit_cmd->add_option("--family-b", o.family_b, "family whose windows form A");
  wit_cmd->add_option("--mu-to", o.mu_to, "last n of the family-b trajectory");
  wit_cmd->add_option("--density-to", o.density_to, "last n with N = n!");
  add_out(wit_cmd);

  auto* cmp_cmd = app.add_subcommand("compare", "one set under two families side by side");
  cmp_cmd->add_option("--family-a", o.family, "first family");
  cmp_cmd->add_option("--family-b", o.family_b, "second family (blocks refers to this one)");
  add_set(cmp_cmd);
  cmp_cmd->add_option("--n", o.n_range, "index range a..b");
  add_policy_opts(cmp_cmd);
  add_out(cmp_cmd);

  auto* part_cmd = app.add_subcommand("partition", "dyadic slice partition G_0..G_n");
  part_cmd->require_subcommand(1);
  auto* pbuild = part_cmd->add_subcommand("build", "construct the blocks");
  add_partition(pbuild);
  pbuild->add_option("--dump-dir", o.dump, "write G_n.iset files");
  auto* pverify = part_cmd->add_subcommand("verify", "check disjointness and coverage of [0, H]");
  add_partition(pverify);
  pverify->add_option("--blocks", o.block_files, "verify these .iset files instead");
  auto* pnorms = part_cmd->add_subcommand("norms", "windowed block and tail norms as CSV");
  add_partition(pnorms);
  pnorms->add_option("--k-window", o.k_window, "k range a..b (default k_max/2..k_max)");

  auto* export_cmd = app.add_subcommand("export", "write .fam/.iset/.seq files");
  export_cmd->require_subcommand(1);
  auto* efam = export_cmd->add_subcommand("family", "windows 0..n_max");
  add_family(efam);
  efam->add_option("--n-max", o.n_max, "last window");
  add_out(efam);
  auto* eset = export_cmd->add_subcommand("set", "a set (restricted to --horizon when infinite)");
  add_family(eset);
  add_set(eset);
  eset->add_option("--horizon", o.horizon, "restriction bound");
  add_out(eset);
  auto* eseq = export_cmd->add_subcommand("seq", "sequence values 0..n_max");
  add_family(eseq);
  eseq->add_option("--seq", o.seq, "sequence spec");
  eseq->add_option("--n-max", o.n_max, "last index");
  add_out(eseq);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "gdens: " << e.what() << '\n';
    return kUsage;
  }

  try {
    auto dispatch = [&](std::ostream& os) -> int {
      if (mu_cmd->parsed()) return cmd_mu(o, os);
      if (phi_cmd->parsed()) return cmd_phi(o, os);
      if (norm_cmd->parsed()) return cmd_norm(o, os);
      if (exh_cmd->parsed()) return cmd_exh(o, os);
      if (member_cmd->parsed()) return cmd_member(o, os);
      if (conv_cmd->parsed()) return cmd_converge(o, os);
      if (pu_cmd->parsed()) return cmd_pseudo_union(o, os);
      if (wit_cmd->parsed()) return cmd_witness(o, os);
      if (cmp_cmd->parsed()) return cmd_compare(o, os);
      if (pbuild->parsed()) return cmd_partition_build(o, os);
      if (pverify->parsed()) return cmd_partition_verify(o, os);
      if (pnorms->parsed()) return cmd_partition_norms(o, os);
      if (efam->parsed()) return cmd_export("family", o, os);
      if (eset->parsed()) return cmd_export("set", o, os);
      if (eseq->parsed()) return cmd_export("seq", o, os);
      err << "gdens: no subcommand\n";
      return kUsage;
    };
    return with_output(o, out, dispatch);
  } catch (const InvalidArgument& e) {
    err << "gdens: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "gdens: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "gdens: " << e.what() << '\n';
    return kHorizon;
  } catch (const std::exception& e) {
    err << "gdens: internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace gdens::cli
