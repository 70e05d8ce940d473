#include "condenv/envelopes.hpp"

#include <algorithm>
#include <optional>

#include "condenv/error.hpp"
#include "condenv/lp.hpp"

namespace condenv {

Instance Instance::from_model(AtomSpace space, Prior prior, const StatisticalModel& model) {
  Strategy sigma = strategy_from_model(space, model);
  return Instance{std::move(space), std::move(prior), std::move(sigma)};
}

namespace {

using Sense = LinearProgram::Sense;

std::vector<Rational> row_values(const Instance& inst, const Event& g) {
  std::vector<Rational> out(inst.space.n_conditioning());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = inst.sigma(g, i);
  return out;
}

// sigma(G|.) on one prior block; NotIntegrable unless it is constant there.
Rational block_value(const Instance& inst, const std::vector<Rational>& values, std::size_t b) {
  const auto& rows = inst.prior.block_rows()[b];
  for (auto i : rows)
    if (values[i] != values[rows.front()])
      throw Error(ErrorCode::NotIntegrable, "sigma(F|.) is not constant on prior block " + std::to_string(b + 1));
  return values[rows.front()];
}

// Joint probabilities consistent with {pi, sigma}: weights w_i on the rows with sum pi(B) on every block.
void add_block_constraints(const Instance& inst, LinearProgram& lp, std::size_t scale_var = static_cast<std::size_t>(-1)) {
  for (std::size_t b = 0; b < inst.prior.block_count(); ++b) {
    std::vector<Rational> row(lp.variables());
    for (auto i : inst.prior.block_rows()[b]) row[i] = 1;
    if (scale_var < lp.variables()) {
      row[scale_var] = -inst.prior.mass()[b];
      lp.add_eq(std::move(row), 0);
    } else {
      lp.add_eq(std::move(row), inst.prior.mass()[b]);
    }
  }
}

Rational joint_extremum(const Instance& inst, const std::vector<Rational>& objective, Sense sense,
                        const std::vector<Rational>* fixed_row = nullptr, const Rational* fixed_value = nullptr) {
  LinearProgram lp(inst.space.n_conditioning());
  add_block_constraints(inst, lp);
  if (fixed_row) lp.add_eq(*fixed_row, *fixed_value);
  lp.set_objective(objective, sense);
  auto r = lp.solve();
  if (!r.optimal()) throw Error(ErrorCode::InvalidInput, "joint polytope LP failed");
  return r.value;
}

// min over joints of P(F&K)/P(K), every joint giving K positive mass.
Rational joint_ratio_min(const Instance& inst, const std::vector<Rational>& fk, const std::vector<Rational>& k) {
  const std::size_t n = inst.space.n_conditioning();
  LinearProgram lp(n + 1);
  add_block_constraints(inst, lp, n);
  std::vector<Rational> norm(k);
  norm.push_back(0);
  lp.add_eq(std::move(norm), 1);
  std::vector<Rational> obj(fk);
  obj.push_back(0);
  lp.set_objective(std::move(obj), Sense::Minimize);
  auto r = lp.solve();
  if (!r.optimal()) throw Error(ErrorCode::InvalidInput, "fractional joint LP failed");
  return r.value;
}

Rational ratio_or_zero(const Rational& a, const Rational& b) { return sgn(b) == 0 ? Rational(0) : Rational(a / b); }

// Case (ii) of the coherent and disintegrable envelopes.
Rational null_case(const Instance& inst, const Event& f, const Event& k, const IndexSets& s, std::string& tag) {
  if (s.i2.empty() || !s.i3.empty()) {
    tag = s.i3.empty() ? "null-K:I2-empty" : "null-K:I3-nonempty";
    return 0;
  }
  std::optional<Rational> best;
  const Event fk = f & k;
  for (auto i : s.i2) {
    const Rational den = inst.sigma(k, i);
    if (sgn(den) == 0) {
      tag = "null-K:sigma(K|H)=0";
      return 0;
    }
    Rational q = inst.sigma(fk, i) / den;
    if (!best || q < *best) best = std::move(q);
  }
  tag = "null-K:I2-min";
  return *best;
}

struct Lower {
  Rational value;
  std::string tag;
  std::map<std::string, Rational> aux;
};

Lower coherent_lower(const Instance& inst, const Event& f, const Event& k) {
  Lower out;
  if (k.subset_of(f)) {
    out.value = 1;
    out.tag = "F>=K";
    return out;
  }
  const Rational pk = lower_joint(inst, k);
  if (sgn(pk) == 0) {
    out.value = null_case(inst, f, k, index_sets(inst.space, f, k), out.tag);
    return out;
  }
  const Event fk = f & k, fck = k - f;
  const auto vfk = row_values(inst, fk), vfck = row_values(inst, fck), vk = row_values(inst, k);
  const Rational low_fk = lower_joint(inst, fk), up_fck = upper_joint(inst, fck);
  const bool unique = inst.prior.singleton_blocks();
  const Rational l = unique ? low_fk : joint_extremum(inst, vfk, Sense::Minimize, &vfck, &up_fck);
  const Rational u_c = unique ? up_fck : joint_extremum(inst, vfck, Sense::Maximize, &vfk, &low_fk);
  const Rational two = std::min(ratio_or_zero(low_fk, low_fk + u_c), ratio_or_zero(l, l + up_fck));
  out.aux["L"] = l;
  out.aux["U_complement"] = u_c;
  out.aux["two_ratio"] = two;
  if (unique) {
    out.value = two;
    out.tag = "positive-K:joint-ratio";
  } else {
    out.value = joint_ratio_min(inst, vfk, vk);
    out.tag = "positive-K:fractional-lp";
  }
  return out;
}

EnvelopeResult assemble(const Lower& lo, const Lower& lo_c, const IndexSets& sets) {
  EnvelopeResult r;
  r.lower = lo.value;
  r.upper = 1 - lo_c.value;
  r.case_tag = lo.tag;
  r.upper_case_tag = lo_c.tag;
  r.sets = sets;
  r.aux = lo.aux;
  for (const auto& [key, v] : lo_c.aux) r.aux[key + "[complement]"] = v;
  return r;
}

void require_nonempty(const Event& k) {
  if (k.empty()) throw Error(ErrorCode::EmptyConditioning, "conditioning event is empty");
}

Lower dis_lower(const Instance& inst, const Event& f, const Event& k) {
  Lower out;
  if (k.subset_of(f)) {
    out.value = 1;
    out.tag = "F>=K";
    return out;
  }
  const Rational pk = disintegrable_joint(inst, k);
  if (sgn(pk) > 0) {
    out.value = disintegrable_joint(inst, f & k) / pk;
    out.tag = "positive-K:ratio";
    return out;
  }
  out.value = null_case(inst, f, k, index_sets(inst.space, f, k), out.tag);
  return out;
}

Lower prior_lower(const Instance& inst, const Event& f, const Event& k) {
  Lower out;
  const Rational pk = inst.prior.of(k);
  if (sgn(pk) > 0) {
    out.value = inst.prior.of(f & k) / pk;
    out.tag = "positive-K:ratio";
  } else {
    out.value = k.subset_of(f) ? 1 : 0;
    out.tag = "null-K:vacuous";
  }
  return out;
}

Lower fd_lower(const Instance& inst, const Event& f, const Event& k) {
  Lower out;
  if (k.subset_of(f)) {
    out.value = 1;
    out.tag = "F>=K";
    return out;
  }
  const auto& prior = inst.prior;
  const Event fk = f & k, fck = k - f;
  if (prior.measurable(k)) {
    const Rational pk = prior.of(k);
    const auto vfk = row_values(inst, fk);
    if (sgn(pk) > 0) {
      Rational num = 0;
      for (auto b : prior.sub().blocks_inside(k)) num += prior.mass()[b] * block_value(inst, vfk, b);
      out.value = num / pk;
      out.tag = "prior-K:ratio";
    } else {
      std::optional<Rational> best;
      for (auto i : inst.space.rows_inside(k))
        if (!best || vfk[i] < *best) best = vfk[i];
      out.value = *best;
      out.tag = "prior-K:inf";
    }
    return out;
  }

  // Smallest prior event containing K.
  const auto blocks = prior.sub().blocks_meeting(k);
  Rational pa = 0;
  for (auto b : blocks) pa += prior.mass()[b];
  const auto vfk = row_values(inst, fk), vfck = row_values(inst, fck);
  std::vector<Rational> x, y;
  for (auto b : blocks) {
    x.push_back(block_value(inst, vfk, b));
    y.push_back(block_value(inst, vfck, b));
  }
  if (sgn(pa) > 0) {
    Rational qx = 0, qy = 0;
    for (std::size_t q = 0; q < blocks.size(); ++q) {
      qx += prior.mass()[blocks[q]] * x[q];
      qy += prior.mass()[blocks[q]] * y[q];
    }
    qx /= pa;
    qy /= pa;
    out.aux["Q(F&K|A)"] = qx;
    out.aux["Q(F^c&K|A)"] = qy;
    if (sgn(qx + qy) > 0) {
      out.aux["L"] = qx;
      out.aux["U_complement"] = qy;
      out.aux["two_ratio"] = qx / (qx + qy);
      out.value = qx / (qx + qy);
      out.tag = "hull:fixed-ratio";
      return out;
    }
  }

  // K is null under Q(.|A): the first layer reaching K is the conditional prior of one block, or
  // a layer on sigma-null atoms of a block reached earlier.
  std::optional<Rational> best;
  bool all_positive = true;
  for (std::size_t q = 0; q < x.size(); ++q) {
    Rational r;
    if (sgn(x[q] + y[q]) > 0) {
      r = x[q] / (x[q] + y[q]);
    } else {
      all_positive = false;
      r = (fck & prior.sub().block(blocks[q])).empty() ? 1 : 0;
    }
    if (!best || r < *best) best = std::move(r);
  }
  out.value = *best;
  out.tag = sgn(pa) > 0 ? "hull:Q(K|A)=0" : "hull:vertex-min";
  if (!all_positive) return out;
  const Rational x_min = *std::min_element(x.begin(), x.end());
  const Rational y_max = *std::max_element(y.begin(), y.end());
  std::optional<Rational> l, u_c;
  for (std::size_t q = 0; q < x.size(); ++q) {
    if (y[q] == y_max && (!l || x[q] < *l)) l = x[q];
    if (x[q] == x_min && (!u_c || y[q] > *u_c)) u_c = y[q];
  }
  out.aux["L"] = *l;
  out.aux["U_complement"] = *u_c;
  out.aux["two_ratio"] = std::min(ratio_or_zero(x_min, x_min + *u_c), ratio_or_zero(*l, *l + y_max));
  return out;
}

}  // namespace

Rational lower_joint(const Instance& inst, const Event& f) {
  const auto vals = row_values(inst, f);
  Rational total = 0;
  for (std::size_t b = 0; b < inst.prior.block_count(); ++b) {
    const auto& rows = inst.prior.block_rows()[b];
    Rational m = vals[rows.front()];
    for (auto i : rows) m = std::min(m, vals[i]);
    total += inst.prior.mass()[b] * m;
  }
  return total;
}

Rational upper_joint(const Instance& inst, const Event& f) { return 1 - lower_joint(inst, ~f); }

Rational lower_joint_by_partitions(const Instance& inst, const Event& f, std::size_t max_count) {
  const auto vals = row_values(inst, f);
  std::optional<Rational> best;
  for (const auto& part : finite_partitions(inst.space, inst.prior.sub(), max_count)) {
    Rational total = 0;
    for (const auto& piece : part) {
      const auto rows = inst.space.rows_inside(piece);
      Rational m = vals[rows.front()];
      for (auto i : rows) m = std::min(m, vals[i]);
      total += inst.prior.of(piece) * m;
    }
    if (!best || total > *best) best = std::move(total);
  }
  return *best;
}

IndexSets index_sets(const AtomSpace& space, const Event& f, const Event& k) {
  require_nonempty(k);
  IndexSets s;
  const Event fk = f & k, fck = k - f;
  for (std::size_t i = 0; i < space.n_conditioning(); ++i) {
    const Event h = space.row(i);
    const bool a = h.intersects(fk), b = h.intersects(fck);
    if (a && !b) s.i1.push_back(i);
    if (a && b) s.i2.push_back(i);
    if (!a && b) s.i3.push_back(i);
  }
  return s;
}

EnvelopeResult conditional_envelope(const Instance& inst, const Event& f, const Event& k) {
  require_nonempty(k);
  return assemble(coherent_lower(inst, f, k), coherent_lower(inst, ~f, k), index_sets(inst.space, f, k));
}

Rational disintegrable_joint(const Instance& inst, const Event& f) {
  const auto vals = row_values(inst, f);
  Rational total = 0;
  for (std::size_t b = 0; b < inst.prior.block_count(); ++b) total += inst.prior.mass()[b] * block_value(inst, vals, b);
  return total;
}

EnvelopeResult dis_extension_envelope(const Instance& inst, const Event& f, const Event& k) {
  require_nonempty(k);
  return assemble(dis_lower(inst, f, k), dis_lower(inst, ~f, k), index_sets(inst.space, f, k));
}

EnvelopeResult conditional_prior_envelope(const Instance& inst, const Event& f, const Event& k) {
  require_nonempty(k);
  if (!inst.prior.measurable(f) || !inst.prior.measurable(k))
    throw Error(ErrorCode::EventNotInPriorAlgebra, "conditional prior needs F and K in the prior algebra");
  return assemble(prior_lower(inst, f, k), prior_lower(inst, ~f, k), index_sets(inst.space, f, k));
}

EnvelopeResult fully_dis_envelope(const Instance& inst, const Event& f, const Event& k) {
  require_nonempty(k);
  return assemble(fd_lower(inst, f, k), fd_lower(inst, ~f, k), index_sets(inst.space, f, k));
}

}  // namespace condenv
