#include "commands.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "condenv/capacity.hpp"
#include "condenv/coherence.hpp"
#include "condenv/countable.hpp"
#include "condenv/envelopes.hpp"
#include "condenv/error.hpp"
#include "json.hpp"
#include "model_file.hpp"

namespace envctl {

using condenv::AtomSpace;
using condenv::Error;
using condenv::ErrorCode;
using condenv::Event;
using condenv::Rational;
using nlohmann::json;

namespace {

json number(const Rational& q) { return {{"exact", condenv::to_string(q)}, {"decimal", q.get_d()}}; }

std::string show(const Rational& q) { return condenv::to_string(q) + " (" + condenv::to_decimal(q) + ")"; }

class Table {
 public:
  explicit Table(std::vector<std::string> head) : rows_{std::move(head)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (width.size() <= c) width.push_back(0);
        width[c] = std::max(width[c], r[c].size());
      }
    for (const auto& r : rows_) {
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (c + 1 < r.size())
          os << std::left << std::setw(static_cast<int>(width[c])) << r[c] << "  ";
        else
          os << r[c];
      }
      os << "\n";
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string describe(const AtomSpace& space, const Event& e) {
  if (e == space.omega()) return "Omega";
  if (e.empty()) return "empty";
  std::string out;
  if (space.is_row_union(e)) {
    for (auto i : space.rows_inside(e)) out += (out.empty() ? "H" : "+H") + std::to_string(i + 1);
    return out;
  }
  e.for_each([&](std::size_t a) { out += (out.empty() ? "" : "+") + space.atom_label(a); });
  return out;
}

std::string join_indices(const std::vector<std::size_t>& xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "H" : " H") + std::to_string(x + 1);
  return out.empty() ? "-" : out;
}

json layers_json(const AtomSpace& space, const condenv::LayeredConditional& p) {
  json layers = json::array();
  for (const auto& layer : p.layers()) {
    json l = json::object();
    for (std::size_t a = 0; a < layer.size(); ++a)
      if (layer[a] != 0) l[space.atom_label(a)] = condenv::to_string(layer[a]);
    layers.push_back(l);
  }
  return layers;
}

void print_layers(std::ostream& os, const AtomSpace& space, const condenv::LayeredConditional& p) {
  for (std::size_t k = 0; k < p.layers().size(); ++k) {
    os << "  layer " << k << ":";
    const auto& layer = p.layers()[k];
    for (std::size_t a = 0; a < layer.size(); ++a)
      if (layer[a] != 0) os << " " << space.atom_label(a) << "=" << condenv::to_string(layer[a]);
    os << "\n";
  }
}

struct Labelled {
  condenv::ConditionalAssessment a;
  std::vector<std::string> labels;
};

Labelled assemble(const ModelFile& m, const AtomSpace& space, const condenv::Instance& inst) {
  Labelled out;
  out.a = condenv::assessment_from_prior_strategy(space, inst.prior, inst.sigma);
  for (const auto& e : out.a.entries())
    out.labels.push_back(describe(space, e.f) + " | " + describe(space, e.k) + " = " + condenv::to_string(e.value));
  const auto aliases = build_aliases(m, space);
  for (const auto& line : m.assessments) {
    out.a.add(condenv::event_of(space, line.f, aliases), condenv::event_of(space, line.k, aliases), line.value);
    out.labels.push_back(line.f + " | " + line.k + " = " + condenv::to_string(line.value));
  }
  return out;
}

}  // namespace

int cmd_check(const std::string& file, bool witness, bool json_out, std::ostream& out) {
  const ModelFile m = load_model(file);
  if (!m.finite()) throw Error(ErrorCode::InvalidInput, "check needs a finite model ([space], [prior], [model])");
  const auto inst = build_instance(m);
  const auto assessed = assemble(m, inst.space, inst);
  const auto result = condenv::check_coherence(inst.space, assessed.a);

  json report = {{"command", "check"},
                 {"file", file},
                 {"atoms", inst.space.atom_count()},
                 {"entries", assessed.a.size()},
                 {"coherent", result.coherent}};
  if (!result.coherent) {
    json uncovered = json::array();
    for (auto k : result.uncovered) uncovered.push_back(assessed.labels[k]);
    report["failed_layer"] = result.failed_layer;
    report["uncovered"] = uncovered;
  }
  if (witness && result.witness) report["witness"] = layers_json(inst.space, *result.witness);

  if (json_out) {
    out << report.dump(2) << "\n";
  } else {
    out << "file      " << file << "\n"
        << "atoms     " << inst.space.atom_count() << "\n"
        << "entries   " << assessed.a.size() << "\n"
        << "coherent  " << (result.coherent ? "yes" : "no") << "\n";
    if (!result.coherent) {
      out << "no layer can be built at depth " << result.failed_layer << "; entries left uncovered:\n";
      for (auto k : result.uncovered) out << "  " << assessed.labels[k] << "\n";
    }
    if (witness && result.witness) {
      out << "witness:\n";
      print_layers(out, inst.space, *result.witness);
    }
  }
  return result.coherent ? kOk : kViolation;
}

namespace {

const std::vector<std::string> kKinds = {"coherent", "dis", "fully-dis", "sc", "fsc"};

condenv::EnvelopeResult finite_envelope(const condenv::Instance& inst, const std::string& kind, const Event& f,
                                        const Event& k) {
  if (kind == "coherent") return condenv::conditional_envelope(inst, f, k);
  // On a finite partition strong conglomerability coincides with disintegrability.
  if (kind == "dis" || kind == "sc") return condenv::dis_extension_envelope(inst, f, k);
  return condenv::fully_dis_envelope(inst, f, k);
}

condenv::EnvelopeResult countable_envelope(const condenv::ProfileModel& model, const std::string& kind,
                                           const Event& f, const Event& k) {
  const Event omega = model.quotient().omega();
  if (kind == "coherent") throw Error(ErrorCode::NotDescribable, "coherent envelopes need a finite model");
  if (kind == "fully-dis") return condenv::fd_envelope_countable(model, f, k);
  if (kind == "fsc") {
    condenv::EnvelopeResult r;
    const auto lo = condenv::fsc_lower(model, f, k);
    const auto hi = condenv::fsc_lower(model, ~f, k);
    r.lower = lo.lower;
    r.upper = 1 - hi.lower;
    r.case_tag = "vertex-allocation";
    r.upper_case_tag = "vertex-allocation";
    return r;
  }
  if (k != omega)
    throw Error(ErrorCode::NotDescribable, "kind '" + kind + "' on a countable model needs K = Omega");
  if (kind == "sc") return condenv::sc_envelope(model, f);
  return condenv::joint_bounds_countable(model, f);
}

}  // namespace

int cmd_envelope(const std::string& file, const std::string& kind, bool oracle, bool json_out, std::ostream& out) {
  if (std::find(kKinds.begin(), kKinds.end(), kind) == kKinds.end())
    throw Error(ErrorCode::InvalidInput, "unknown kind '" + kind + "'");
  const ModelFile m = load_model(file);
  if (m.queries.empty()) throw Error(ErrorCode::InvalidInput, file + ": no [queries]");

  std::optional<condenv::Instance> inst;
  std::optional<condenv::ProfileModel> model;
  if (m.has_profiles)
    model.emplace(build_profile_model(m));
  else
    inst.emplace(build_instance(m));
  const AtomSpace& space = model ? model->quotient() : inst->space;
  const auto aliases = build_aliases(m, space);

  std::optional<condenv::ExtensionOracle> lp;
  if (oracle && inst) lp.emplace(inst->space, condenv::assessment_from_prior_strategy(inst->space, inst->prior, inst->sigma));

  bool all_agree = true;
  bool unsupported = false;
  json results = json::array();
  std::vector<std::string> head = {"query", "lower", "upper", "case"};
  if (lp) head.push_back("oracle");
  Table table(head);
  for (const auto& q : m.queries) {
    const std::string label = q.f + " | " + q.k;
    const Event f = condenv::event_of(space, q.f, aliases);
    const Event k = condenv::event_of(space, q.k, aliases);
    if (k.empty()) throw Error(ErrorCode::EmptyConditioning, "query " + label);
    condenv::EnvelopeResult r;
    try {
      r = model ? countable_envelope(*model, kind, f, k) : finite_envelope(*inst, kind, f, k);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotDescribable && e.code() != ErrorCode::NotIntegrable &&
          e.code() != ErrorCode::EventNotInPriorAlgebra && e.code() != ErrorCode::GroundTooLarge)
        throw;
      unsupported = true;
      results.push_back({{"query", label}, {"kind", kind}, {"error", e.what()}});
      table.add({label, "-", "-", e.what()});
      continue;
    }

    json row = {{"query", label},
                {"kind", kind},
                {"lower", number(r.lower)},
                {"upper", number(r.upper)},
                {"case_tag", r.case_tag},
                {"upper_case_tag", r.upper_case_tag},
                {"index_sets", {{"I1", r.sets.i1}, {"I2", r.sets.i2}, {"I3", r.sets.i3}}}};
    json aux = json::object();
    for (const auto& [name, v] : r.aux) aux[name] = number(v);
    if (!aux.empty()) row["aux"] = aux;

    std::vector<std::string> line = {label, show(r.lower), show(r.upper), r.case_tag};
    if (lp) {
      const auto iv = lp->interval(f, k);
      const bool agree = kind == "coherent" ? (iv.lo == r.lower && iv.hi == r.upper)
                                            : (iv.lo <= r.lower && r.lower <= r.upper && r.upper <= iv.hi);
      all_agree = all_agree && agree;
      row["oracle"] = {{"lower", number(iv.lo)}, {"upper", number(iv.hi)}, {"agree", agree}};
      line.push_back(std::string(agree ? "agree" : "MISMATCH") + " [" + condenv::to_string(iv.lo) + ", " +
                     condenv::to_string(iv.hi) + "]");
    }
    results.push_back(row);
    table.add(line);
  }

  if (json_out) {
    json report = {{"command", "envelope"}, {"file", file}, {"kind", kind}, {"results", results}};
    if (lp) report["oracle_agree"] = all_agree;
    out << report.dump(2) << "\n";
  } else {
    out << "kind " << kind << (model ? " (countable model)" : "") << "\n";
    table.print(out);
  }
  if (!all_agree) return kViolation;
  return unsupported ? kUnsupported : kOk;
}

condenv::Instance bayes_instance(unsigned k, unsigned n) {
  auto binomial = [](unsigned nn, unsigned x) {
    Rational r = 1;
    for (unsigned t = 1; t <= x; ++t) r = r * (nn - x + t) / t;
    return r;
  };
  std::vector<std::vector<Rational>> rows;
  std::vector<std::vector<bool>> compat(k + 1, std::vector<bool>(n + 1));
  for (unsigned j = 0; j <= k; ++j) {
    Rational th(j, k);
    th.canonicalize();
    std::vector<Rational> row;
    for (unsigned x = 0; x <= n; ++x) {
      Rational v = binomial(n, x);
      for (unsigned t = 0; t < x; ++t) v *= th;
      for (unsigned t = x; t < n; ++t) v *= 1 - th;
      compat[j][x] = v != 0;
      row.push_back(v);
    }
    rows.push_back(row);
  }
  auto space = AtomSpace::build(compat);
  Rational w(1, k + 1);
  auto prior = condenv::Prior::on_cells(space, std::vector<Rational>(k + 1, w));
  return condenv::Instance::from_model(space, prior, condenv::StatisticalModel{rows});
}

std::vector<BayesRow> bayes_table(const BayesOptions& opt) {
  if (opt.grid < 2) throw Error(ErrorCode::BadGrid, "grid size must be at least 2");
  if (!(0 <= opt.theta1 && opt.theta1 < opt.theta2 && opt.theta2 <= 1))
    throw Error(ErrorCode::BadGrid, "need 0 <= theta1 < theta2 <= 1");
  std::vector<BayesRow> out;
  for (unsigned d = 0; d <= opt.doublings; ++d) {
    const unsigned k = opt.grid << d;
    for (const auto* th : {&opt.theta1, &opt.theta2}) {
      const Rational scaled = *th * k;
      if (scaled.get_den() != 1)
        throw Error(ErrorCode::BadGrid, condenv::to_string(*th) + " is not a point of the grid 1/" + std::to_string(k));
    }
    const auto inst = bayes_instance(k, opt.n);
    Event a = inst.space.none();
    for (unsigned j = 0; j <= k; ++j) {
      const Rational th(j, k);
      if (th > opt.theta1 && th <= opt.theta2) a |= inst.space.row(j);
    }
    const Event b = inst.space.column(opt.n);
    BayesRow row;
    row.k = k;
    row.value = condenv::fully_dis_envelope(inst, a, b).lower;
    Rational p1 = 1, p2 = 1;
    for (unsigned t = 0; t <= opt.n; ++t) {
      p1 *= opt.theta1;
      p2 *= opt.theta2;
    }
    row.limit = p2 - p1;
    row.predictive = condenv::disintegrable_joint(inst, b);
    out.push_back(row);
  }
  return out;
}

int cmd_bayes(const BayesOptions& opt, bool json_out, std::ostream& out) {
  const auto rows = bayes_table(opt);
  const Rational uniform(1, opt.n + 1);
  if (json_out) {
    json arr = json::array();
    for (const auto& r : rows) {
      Rational err = abs(r.value - r.limit);
      arr.push_back({{"k", r.k},
                     {"value", number(r.value)},
                     {"limit", number(r.limit)},
                     {"abs_error", number(err)},
                     {"predictive", number(r.predictive)},
                     {"predictive_limit", number(uniform)}});
    }
    out << json{{"command", "bayes"},
                {"n", opt.n},
                {"theta1", condenv::to_string(opt.theta1)},
                {"theta2", condenv::to_string(opt.theta2)},
                {"rows", arr}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << "posterior envelope of theta in (" << condenv::to_string(opt.theta1) << ", "
      << condenv::to_string(opt.theta2) << "] given X = " << opt.n << "\n";
  Table t({"k", "value", "limit", "abs error", "P(X=n)", "1/(n+1)"});
  for (const auto& r : rows)
    t.add({std::to_string(r.k), condenv::to_decimal(r.value, 8), condenv::to_decimal(r.limit, 8),
           condenv::to_decimal(abs(r.value - r.limit), 8), condenv::to_decimal(r.predictive, 8),
           condenv::to_decimal(uniform, 8)});
  t.print(out);
  return kOk;
}

namespace {

std::string subset_name(const condenv::Capacity& v, condenv::Mask s) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (s >> k & 1U) out += (out.empty() ? "" : ",") + v.ground()[k];
  return "{" + out + "}";
}

}  // namespace

int cmd_capacity(const std::string& file, bool json_out, std::ostream& out) {
  const ModelFile m = load_model(file);
  condenv::Capacity v;
  if (m.is_capacity()) {
    v = build_capacity(m);
  } else if (m.finite()) {
    const auto inst = build_instance(m);
    std::vector<condenv::Mask> blocks;
    for (const auto& rows : inst.prior.block_rows()) {
      condenv::Mask b = 0;
      for (auto i : rows) b |= condenv::Mask{1} << i;
      blocks.push_back(b);
    }
    const auto inner = condenv::inner_measure(m.n_conditioning, blocks, inst.prior.mass());
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m.n_conditioning; ++i) names.push_back("H" + std::to_string(i + 1));
    v = condenv::Capacity(names, inner.values());
  } else {
    throw Error(ErrorCode::InvalidInput, file + ": no [capacity] section and no finite prior");
  }

  const auto masses = condenv::mobius(v);
  const auto two = condenv::check_n_monotone(v, 2);
  const bool total = condenv::is_totally_monotone(v);
  std::vector<std::vector<Rational>> core;
  if (two.ok) core = condenv::core_vertices(v);
  const auto upper = condenv::dual(v);

  struct Value {
    std::string name;
    Rational lower, upper;
  };
  std::vector<Value> values;
  for (const auto& x : m.integrands) {
    if (x.values.size() != v.size())
      throw Error(ErrorCode::InvalidInput, "integrand " + x.name + " has the wrong length");
    values.push_back({x.name, condenv::choquet(x.values, v), condenv::choquet(x.values, upper)});
  }

  if (json_out) {
    json mob = json::object();
    for (condenv::Mask s = 1; s <= v.full(); ++s)
      if (masses.mass[s] != 0) mob[subset_name(v, s)] = number(masses.mass[s]);
    json report = {{"command", "capacity"}, {"ground", v.ground()}, {"mobius", mob},
                   {"two_monotone", two.ok},   {"totally_monotone", total}};
    if (!two.ok) {
      json w = json::array();
      for (auto s : two.witness) w.push_back(subset_name(v, s));
      report["two_monotone_witness"] = {{"sets", w}, {"lhs", number(two.lhs)}, {"rhs", number(two.rhs)}};
    } else {
      json c = json::array();
      for (const auto& p : core) {
        json row = json::array();
        for (const auto& x : p) row.push_back(condenv::to_string(x));
        c.push_back(row);
      }
      report["core_vertices"] = c;
    }
    json ch = json::array();
    for (const auto& x : values) ch.push_back({{"name", x.name}, {"lower", number(x.lower)}, {"upper", number(x.upper)}});
    report["choquet"] = ch;
    out << report.dump(2) << "\n";
    return kOk;
  }

  out << "ground ";
  for (const auto& g : v.ground()) out << " " << g;
  out << "\nmobius masses:\n";
  Table t({"  set", "mass"});
  for (condenv::Mask s = 1; s <= v.full(); ++s)
    if (masses.mass[s] != 0) t.add({"  " + subset_name(v, s), show(masses.mass[s])});
  t.print(out);
  out << "2-monotone: " << (two.ok ? "yes" : "NO");
  if (!two.ok) {
    out << " (";
    for (std::size_t k = 0; k < two.witness.size(); ++k) out << (k ? ", " : "") << subset_name(v, two.witness[k]);
    out << ": v(union) = " << condenv::to_string(two.lhs) << " < " << condenv::to_string(two.rhs)
        << " = inclusion-exclusion sum)";
  }
  out << "\ntotally monotone: " << (total ? "yes" : "no") << "\n";
  if (two.ok) {
    out << "core vertices (" << core.size() << "):\n";
    for (const auto& p : core) {
      out << " ";
      for (const auto& x : p) out << " " << condenv::to_string(x);
      out << "\n";
    }
  }
  if (!values.empty()) {
    out << "choquet integrals:\n";
    Table c({"  integrand", "lower", "upper"});
    for (const auto& x : values) c.add({"  " + x.name, show(x.lower), show(x.upper)});
    c.print(out);
  }
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Envelopes of conditional probabilities extending a prior and a strategy", "envctl"};
  app.require_subcommand(1);
  bool json_out = false;
  app.add_flag("--json", json_out, "machine-readable output");

  std::string file, kind = "coherent";
  bool witness = false, oracle = false, analyze = false;
  std::string theta1 = "0", theta2 = "1";
  BayesOptions bayes;

  auto* check = app.add_subcommand("check", "coherence of the assembled assessment");
  check->add_option("file", file, "model file")->required();
  check->add_flag("--witness", witness, "print the layers of a coherent extension");
  check->add_flag("--json", json_out, "machine-readable output");

  auto* envelope = app.add_subcommand("envelope", "lower and upper envelopes for the queries of a model");
  envelope->add_option("file", file, "model file")->required();
  envelope->add_option("--kind", kind, "coherent, dis, fully-dis, sc or fsc")
      ->check(CLI::IsMember(kKinds));
  envelope->add_flag("--oracle", oracle, "cross-check finite queries with the LP oracle");
  envelope->add_flag("--json", json_out, "machine-readable output");

  auto* bayes_cmd = app.add_subcommand("bayes", "discretized posterior envelope against its limit");
  bayes_cmd->add_option("--grid", bayes.grid, "grid size k")->required();
  bayes_cmd->add_option("--n", bayes.n, "number of draws")->required();
  bayes_cmd->add_option("--theta1", theta1, "lower end p/q");
  bayes_cmd->add_option("--theta2", theta2, "upper end p/q");
  bayes_cmd->add_option("--doublings", bayes.doublings, "grid refinements");
  bayes_cmd->add_flag("--json", json_out, "machine-readable output");

  auto* capacity = app.add_subcommand("capacity", "Mobius masses, monotonicity, core and Choquet values");
  capacity->add_option("file", file, "capacity or model file")->required();
  capacity->add_flag("--analyze", analyze, "full analysis (default)");
  capacity->add_flag("--json", json_out, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    const int code = app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(file, witness, json_out, out);
    if (envelope->parsed()) return cmd_envelope(file, kind, oracle, json_out, out);
    if (bayes_cmd->parsed()) {
      bayes.theta1 = condenv::parse_rational(theta1);
      bayes.theta2 = condenv::parse_rational(theta2);
      return cmd_bayes(bayes, json_out, out);
    }
    return cmd_capacity(file, json_out, out);
  } catch (const Error& e) {
    err << "envctl: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::NotDescribable:
      case ErrorCode::NotIntegrable:
      case ErrorCode::EventNotInPriorAlgebra:
      case ErrorCode::GroundTooLarge:
        return kUnsupported;
      case ErrorCode::IncoherentBase:
      case ErrorCode::InconsistentCandidate:
      case ErrorCode::NotTwoMonotone:
        return kViolation;
      default:
        return kUsage;
    }
  }
}

}  // namespace envctl
