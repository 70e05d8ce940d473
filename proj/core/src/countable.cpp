#include "condenv/countable.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "condenv/error.hpp"

namespace condenv {

namespace {

constexpr std::uint64_t kMaxPeriod = 1000000;
constexpr std::size_t kMaxEnumeratedAtoms = 20;
constexpr std::size_t kMaxAllocations = 1000000;

bool in_unit(const Rational& x) { return sgn(x) >= 0 && x <= 1; }

}  // namespace

TailSpec TailSpec::constant(const Rational& v) {
  TailSpec t;
  t.liminf = t.limsup = t.inf_value = t.sup_value = v;
  return t;
}

TailSpec TailSpec::complement() const {
  TailSpec t;
  for (const auto& [i, v] : exceptions) t.exceptions[i] = 1 - v;
  t.liminf = 1 - limsup;
  t.limsup = 1 - liminf;
  t.inf_value = 1 - sup_value;
  t.sup_value = 1 - inf_value;
  t.inf_attained = sup_attained;
  t.sup_attained = inf_attained;
  return t;
}

void TailSpec::validate() const {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidInput, "tail: " + why); };
  if (!in_unit(inf_value) || !in_unit(sup_value) || !in_unit(liminf) || !in_unit(limsup)) fail("values outside [0,1]");
  if (!(inf_value <= liminf && liminf <= limsup && limsup <= sup_value)) fail("need inf <= liminf <= limsup <= sup");
  bool inf_seen = false, sup_seen = false;
  for (const auto& [i, v] : exceptions) {
    if (i == 0) fail("indices start at 1");
    if (v < inf_value || v > sup_value) fail("exception at " + std::to_string(i) + " outside [inf, sup]");
    inf_seen = inf_seen || v == inf_value;
    sup_seen = sup_seen || v == sup_value;
  }
  if (!inf_attained && inf_value != liminf) fail("an infimum below liminf is always attained");
  if (!sup_attained && sup_value != limsup) fail("a supremum above limsup is always attained");
  if (inf_value < liminf && !inf_seen) fail("infimum below liminf needs a listed witness");
  if (sup_value > limsup && !sup_seen) fail("supremum above limsup needs a listed witness");
}

ProfileModel::ProfileModel(std::size_t n_observable, std::vector<Profile> profiles, std::vector<NamedIndex> named,
                           std::vector<DiffuseCell> cells)
    : m_(n_observable), profiles_(std::move(profiles)), named_(std::move(named)), cells_(std::move(cells)) {
  if (m_ == 0 || m_ > 16) throw Error(ErrorCode::InvalidInput, "profile model needs 1..16 observable cells");
  if (profiles_.empty()) throw Error(ErrorCode::InvalidInput, "profile model needs at least one profile");
  if (profiles_.size() + named_.size() > Capacity::kMaxGround)
    throw Error(ErrorCode::GroundTooLarge, "too many profiles and named indices");

  std::uint64_t period = 1;
  for (const auto& p : profiles_) {
    if (p.modulus == 0 || p.residue >= p.modulus)
      throw Error(ErrorCode::InvalidInput, "profile " + p.name + ": need 0 <= residue < modulus");
    period = std::lcm(period, p.modulus);
    if (period > kMaxPeriod) throw Error(ErrorCode::InvalidInput, "profile moduli have too large a common period");
  }
  for (std::uint64_t n = 1; n <= period; ++n) {
    std::size_t hits = 0;
    for (const auto& p : profiles_) hits += p.contains(n) ? 1 : 0;
    if (hits != 1)
      throw Error(ErrorCode::InvalidInput, "profiles do not partition the indices (index " + std::to_string(n) + ")");
  }

  Rational total = 0;
  for (std::size_t q = 0; q < named_.size(); ++q) {
    const auto& nm = named_[q];
    if (nm.index == 0) throw Error(ErrorCode::InvalidInput, "named index " + nm.name + " must be >= 1");
    for (std::size_t r = 0; r < q; ++r)
      if (named_[r].index == nm.index) throw Error(ErrorCode::InvalidInput, "index named twice");
    if (nm.sigma.size() != m_) throw Error(ErrorCode::InvalidInput, "named index " + nm.name + ": wrong row length");
    Rational s = 0;
    for (const auto& v : nm.sigma) {
      if (sgn(v) < 0) throw Error(ErrorCode::InvalidInput, "named index " + nm.name + ": negative entry");
      s += v;
    }
    if (s != 1) throw Error(ErrorCode::InvalidInput, "named index " + nm.name + ": row sums to " + to_string(s));
    if (sgn(nm.mass) < 0) throw Error(ErrorCode::InvalidInput, "named index " + nm.name + ": negative mass");
    total += nm.mass;
  }

  cell_of_profile_.assign(profiles_.size(), cells_.size());
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (cells_[c].profiles.empty()) throw Error(ErrorCode::InvalidInput, "cell " + cells_[c].name + " is empty");
    if (sgn(cells_[c].weight) < 0) throw Error(ErrorCode::InvalidInput, "cell " + cells_[c].name + ": negative weight");
    for (auto p : cells_[c].profiles) {
      if (p >= profiles_.size()) throw Error(ErrorCode::BadIndex, "cell " + cells_[c].name + ": unknown profile");
      if (cell_of_profile_[p] != cells_.size()) throw Error(ErrorCode::InvalidInput, "profile in two cells");
      cell_of_profile_[p] = c;
    }
    total += cells_[c].weight;
  }
  for (std::size_t p = 0; p < profiles_.size(); ++p)
    if (cell_of_profile_[p] == cells_.size())
      throw Error(ErrorCode::InvalidInput, "profile " + profiles_[p].name + " is in no cell");
  if (total != 1) throw Error(ErrorCode::InvalidInput, "prior masses sum to " + to_string(total));

  space_ = AtomSpace::full(profiles_.size() + named_.size(), m_);
}

void ProfileModel::set_tail(std::size_t profile, Mask columns, TailSpec spec) {
  if (profile >= profiles_.size()) throw Error(ErrorCode::BadIndex, "no such profile");
  const Mask full = static_cast<Mask>((1U << m_) - 1);
  if (columns == 0 || columns == full || (columns & ~full) != 0)
    throw Error(ErrorCode::InvalidInput, "tails are given for proper nonempty column sets");
  spec.validate();
  for (const auto& [i, v] : spec.exceptions)
    if (!profiles_[profile].contains(i))
      throw Error(ErrorCode::InvalidInput, "exception index " + std::to_string(i) + " is not in profile " +
                                               profiles_[profile].name);
  tails_[{profile, columns}] = std::move(spec);
}

Event ProfileModel::cell_event(std::size_t c) const {
  Event e = space_.none();
  for (auto p : cells_.at(c).profiles) e |= space_.row(profile_row(p));
  return e;
}

Mask ProfileModel::columns_of(const Event& f, std::size_t r) const {
  Mask m = 0;
  for (auto a : space_.row_atoms(r))
    if (f.contains(a)) m |= Mask{1} << space_.atom_col(a);
  return m;
}

namespace {

TailSpec raw_tail(const ProfileModel& model, std::size_t p, Mask columns) {
  const Mask full = static_cast<Mask>((1U << model.n_observable()) - 1);
  if (columns == 0) return TailSpec::constant(0);
  if (columns == full) return TailSpec::constant(1);
  if (auto it = model.tails().find({p, columns}); it != model.tails().end()) return it->second;
  if (auto it = model.tails().find({p, full ^ columns}); it != model.tails().end()) return it->second.complement();
  throw Error(ErrorCode::NotDescribable, "no tail for profile " + model.profiles()[p].name + " and column set " +
                                             std::to_string(columns));
}

}  // namespace

TailSpec ProfileModel::residual_tail(std::size_t p, Mask columns) const {
  TailSpec t = raw_tail(*this, p, columns);
  std::vector<std::uint64_t> removed;
  for (const auto& nm : named_)
    if (profiles_[p].contains(nm.index)) removed.push_back(nm.index);
  if (removed.empty()) return t;

  auto witnesses = [&](const Rational& v) {
    std::size_t total = 0, kept = 0;
    for (const auto& [i, x] : t.exceptions)
      if (x == v) {
        ++total;
        if (std::find(removed.begin(), removed.end(), i) == removed.end()) ++kept;
      }
    return std::pair{total, kept};
  };
  const auto [inf_total, inf_kept] = witnesses(t.inf_value);
  const auto [sup_total, sup_kept] = witnesses(t.sup_value);
  if (t.inf_value < t.liminf && inf_kept == 0)
    throw Error(ErrorCode::NotDescribable, "removing named indices changes the infimum on profile " + profiles_[p].name);
  if (t.sup_value > t.limsup && sup_kept == 0)
    throw Error(ErrorCode::NotDescribable, "removing named indices changes the supremum on profile " + profiles_[p].name);
  if (inf_total > 0 && inf_kept == 0) t.inf_attained = false;
  if (sup_total > 0 && sup_kept == 0) t.sup_attained = false;
  for (auto i : removed) t.exceptions.erase(i);
  return t;
}

Rational ProfileModel::named_sigma(std::size_t q, Mask columns) const {
  Rational s = 0;
  for (std::size_t j = 0; j < m_; ++j)
    if (columns >> j & 1U) s += named_.at(q).sigma[j];
  return s;
}

bool ProfileModel::in_prior_algebra(const Event& k) const {
  if (!space_.is_row_union(k)) return false;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    const Event e = cell_event(c);
    if (e.intersects(k) && !e.subset_of(k)) return false;
  }
  return true;
}

Rational ProfileModel::prior(const Event& k) const {
  if (!in_prior_algebra(k))
    throw Error(ErrorCode::EventNotInPriorAlgebra, "event is not a union of cells and named indices");
  Rational s = 0;
  for (std::size_t c = 0; c < cells_.size(); ++c)
    if (cell_event(c).subset_of(k)) s += cells_[c].weight;
  for (std::size_t q = 0; q < named_.size(); ++q)
    if (space_.row(named_row(q)).subset_of(k)) s += named_[q].mass;
  return s;
}

std::vector<Mask> ProfileModel::quotient_blocks() const {
  std::vector<Mask> out;
  for (const auto& c : cells_) {
    Mask m = 0;
    for (auto p : c.profiles) m |= Mask{1} << profile_row(p);
    out.push_back(m);
  }
  for (std::size_t q = 0; q < named_.size(); ++q) out.push_back(Mask{1} << named_row(q));
  return out;
}

std::vector<Rational> ProfileModel::quotient_masses() const {
  std::vector<Rational> out;
  for (const auto& c : cells_) out.push_back(c.weight);
  for (const auto& nm : named_) out.push_back(nm.mass);
  return out;
}

namespace {

void require_row_union(const ProfileModel& model, const Event& k) {
  if (k.empty()) throw Error(ErrorCode::EmptyConditioning, "conditioning event is empty");
  if (!model.quotient().is_row_union(k))
    throw Error(ErrorCode::NotDescribable, "conditioning event must be a union of profiles and named indices");
}

// Per-row liminf (or limsup) of sigma(F|.); exact values on named rows.
std::vector<Rational> row_limits(const ProfileModel& model, const Event& f, bool upper) {
  const std::size_t rows = model.quotient().n_conditioning();
  std::vector<Rational> out(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const Mask cols = model.columns_of(f, r);
    if (model.is_named_row(r)) {
      out[r] = model.named_sigma(r - model.profiles().size(), cols);
    } else {
      const TailSpec t = raw_tail(model, r, cols);
      out[r] = upper ? t.limsup : t.liminf;
    }
  }
  return out;
}

// Bounds of sigma(F|.) over one quotient row; `genuine` selects inf/sup instead of liminf/limsup.
std::pair<Rational, Rational> row_bounds(const ProfileModel& model, const Event& f, std::size_t r, bool genuine) {
  const Mask cols = model.columns_of(f, r);
  if (model.is_named_row(r)) {
    Rational v = model.named_sigma(r - model.profiles().size(), cols);
    return {v, v};
  }
  if (genuine) {
    const TailSpec t = model.residual_tail(r, cols);
    return {t.inf_value, t.sup_value};
  }
  const TailSpec t = raw_tail(model, r, cols);
  return {t.liminf, t.limsup};
}

Rational sc_lower_value(const ProfileModel& model, const Event& f) {
  return choquet(row_limits(model, f, false), quotient_inner_measure(model));
}

Rational sc_upper_value(const ProfileModel& model, const Event& f) {
  const std::size_t rows = model.quotient().n_conditioning();
  return choquet(row_limits(model, f, true), outer_measure(rows, model.quotient_blocks(), model.quotient_masses()));
}

}  // namespace

InfSup profile_inf_sup(const ProfileModel& model, const Event& f, const Event& k) {
  require_row_union(model, k);
  std::optional<InfSup> out;
  for (auto r : model.quotient().rows_inside(k)) {
    InfSup cur;
    const Mask cols = model.columns_of(f, r);
    if (model.is_named_row(r)) {
      cur.inf = cur.sup = model.named_sigma(r - model.profiles().size(), cols);
    } else {
      const TailSpec t = model.residual_tail(r, cols);
      cur = {t.inf_value, t.sup_value, t.inf_attained, t.sup_attained};
    }
    if (!out) {
      out = cur;
      continue;
    }
    if (cur.inf < out->inf || (cur.inf == out->inf && cur.inf_attained)) {
      out->inf_attained = cur.inf_attained || (cur.inf == out->inf && out->inf_attained);
      out->inf = cur.inf;
    }
    if (cur.sup > out->sup || (cur.sup == out->sup && cur.sup_attained)) {
      out->sup_attained = cur.sup_attained || (cur.sup == out->sup && out->sup_attained);
      out->sup = cur.sup;
    }
  }
  return *out;
}

Capacity quotient_inner_measure(const ProfileModel& model) {
  return inner_measure(model.quotient().n_conditioning(), model.quotient_blocks(), model.quotient_masses());
}

EnvelopeResult sc_envelope(const ProfileModel& model, const Event& f) {
  EnvelopeResult r;
  r.lower = sc_lower_value(model, f);
  r.upper = sc_upper_value(model, f);
  r.case_tag = "lower-S-integral";
  r.upper_case_tag = "upper-S-integral";
  return r;
}

namespace {

Rational joint_lower_value(const ProfileModel& model, const Event& f) {
  Rational s = 0;
  for (std::size_t q = 0; q < model.named().size(); ++q)
    s += model.named()[q].mass * model.named_sigma(q, model.columns_of(f, model.named_row(q)));
  for (std::size_t c = 0; c < model.cells().size(); ++c)
    if (model.cell_event(c).subset_of(f)) s += model.cells()[c].weight;
  return s;
}

}  // namespace

EnvelopeResult joint_bounds_countable(const ProfileModel& model, const Event& f) {
  EnvelopeResult r;
  r.lower = joint_lower_value(model, f);
  r.upper = 1 - joint_lower_value(model, ~f);
  const EnvelopeResult sc = sc_envelope(model, f);
  r.aux["sc_lower"] = sc.lower;
  r.aux["sc_upper"] = sc.upper;
  if (!(r.lower <= sc.lower && sc.lower <= sc.upper && sc.upper <= r.upper))
    throw Error(ErrorCode::InvalidInput, "joint / S-integral sandwich violated");
  r.case_tag = "joint";
  r.upper_case_tag = "joint";
  return r;
}

EnvelopeResult fd_envelope_countable(const ProfileModel& model, const Event& f, const Event& k) {
  require_row_union(model, k);
  EnvelopeResult r;
  if (k.subset_of(f)) {
    r.lower = r.upper = 1;
    r.case_tag = r.upper_case_tag = "F>=K";
    return r;
  }
  if (!f.intersects(k)) {
    r.lower = r.upper = 0;
    r.case_tag = r.upper_case_tag = "F&K=0";
    return r;
  }
  if (!model.in_prior_algebra(k))
    throw Error(ErrorCode::NotDescribable, "conditioning event splits a diffuse cell");
  const Rational pk = model.prior(k);
  if (sgn(pk) > 0) {
    const Event fk = f & k;
    const Rational lo = sc_lower_value(model, fk), hi = sc_upper_value(model, fk);
    if (lo != hi)
      throw Error(ErrorCode::NotIntegrable, "sigma(F&K|.) has lower S-integral " + to_string(lo) + " and upper " +
                                                to_string(hi));
    r.lower = r.upper = lo / pk;
    r.case_tag = r.upper_case_tag = "prior-K:ratio";
    return r;
  }
  const InfSup a = profile_inf_sup(model, f, k);
  const InfSup b = profile_inf_sup(model, ~f, k);
  r.lower = a.inf;
  r.upper = 1 - b.inf;
  r.case_tag = r.upper_case_tag = "prior-K:inf";
  r.aux["sup"] = a.sup;
  return r;
}

FscResult fsc_lower(const ProfileModel& model, const Event& f, const Event& k) {
  require_row_union(model, k);
  const auto& cells = model.cells();
  std::vector<std::size_t> choice(cells.size(), 0);
  std::size_t count = 1;
  for (const auto& c : cells) {
    count *= sgn(c.weight) > 0 ? c.profiles.size() : 1;
    if (count > kMaxAllocations) throw Error(ErrorCode::GroundTooLarge, "too many vertex allocations");
  }

  const auto rows_in_k = model.quotient().rows_inside(k);
  auto in_k = [&](std::size_t r) { return std::find(rows_in_k.begin(), rows_in_k.end(), r) != rows_in_k.end(); };
  const auto low = row_limits(model, f, false);
  std::optional<Rational> null_inf;

  FscResult best;
  bool have = false;
  for (;;) {
    std::vector<std::size_t> alloc(cells.size());
    Rational nu_k = 0, num = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      alloc[c] = cells[c].profiles[choice[c]];
      if (in_k(model.profile_row(alloc[c]))) {
        nu_k += cells[c].weight;
        num += cells[c].weight * low[model.profile_row(alloc[c])];
      }
    }
    for (std::size_t q = 0; q < model.named().size(); ++q)
      if (in_k(model.named_row(q))) {
        nu_k += model.named()[q].mass;
        num += model.named()[q].mass * low[model.named_row(q)];
      }
    Rational value;
    if (k.subset_of(f)) {
      value = 1;
    } else if (sgn(nu_k) > 0) {
      value = num / nu_k;
    } else {
      if (!null_inf) null_inf = profile_inf_sup(model, f, k).inf;
      value = *null_inf;
    }
    if (!have || value < best.lower) {
      best.lower = value;
      best.allocation = alloc;
      have = true;
    }
    std::size_t c = 0;
    while (c < cells.size()) {
      const std::size_t span = sgn(cells[c].weight) > 0 ? cells[c].profiles.size() : 1;
      if (++choice[c] < span) break;
      choice[c] = 0;
      ++c;
    }
    if (c == cells.size()) break;
  }
  return best;
}

namespace {

// Describable prior events: unions of cells and named indices, indexed by a bit per cell then per named index.
Event prior_event(const ProfileModel& model, unsigned long long pick) {
  Event e = model.quotient().none();
  const std::size_t nc = model.cells().size();
  for (std::size_t c = 0; c < nc; ++c)
    if (pick >> c & 1ULL) e |= model.cell_event(c);
  for (std::size_t q = 0; q < model.named().size(); ++q)
    if (pick >> (nc + q) & 1ULL) e |= model.quotient().row(model.named_row(q));
  return e;
}

void check_size(const ProfileModel& model) {
  if (model.quotient().atom_count() > kMaxEnumeratedAtoms)
    throw Error(ErrorCode::GroundTooLarge, "conglomerability check enumerates at most " +
                                               std::to_string(kMaxEnumeratedAtoms) + " quotient atoms");
}

// inf and sup of sigma(F|.) over the rows of b.
std::pair<Rational, Rational> bounds_over(const ProfileModel& model, const Event& f, const Event& b, bool genuine) {
  std::optional<Rational> lo, hi;
  for (auto r : model.quotient().rows_inside(b)) {
    auto [l, h] = row_bounds(model, f, r, genuine);
    if (!lo || l < *lo) lo = l;
    if (!hi || h > *hi) hi = h;
  }
  return {*lo, *hi};
}

Rational mass_of(const std::vector<Rational>& x, const Event& e) {
  Rational s = 0;
  e.for_each([&](std::size_t a) { s += x[a]; });
  return s;
}

}  // namespace

CongReport check_strong_conglomerability(const ProfileModel& model, const std::vector<Rational>& candidate) {
  check_size(model);
  const AtomSpace& qs = model.quotient();
  const std::size_t n = qs.atom_count();
  if (candidate.size() != n) throw Error(ErrorCode::InconsistentCandidate, "candidate has wrong length");
  Rational total = 0;
  for (const auto& x : candidate) {
    if (sgn(x) < 0) throw Error(ErrorCode::InconsistentCandidate, "negative candidate mass");
    total += x;
  }
  if (total != 1) throw Error(ErrorCode::InconsistentCandidate, "candidate masses sum to " + to_string(total));
  for (std::size_t c = 0; c < model.cells().size(); ++c)
    if (mass_of(candidate, model.cell_event(c)) != model.cells()[c].weight)
      throw Error(ErrorCode::InconsistentCandidate, "candidate does not extend the prior on " + model.cells()[c].name);
  for (std::size_t q = 0; q < model.named().size(); ++q)
    for (auto a : qs.row_atoms(model.named_row(q)))
      if (candidate[a] != model.named()[q].mass * model.named()[q].sigma[qs.atom_col(a)])
        throw Error(ErrorCode::InconsistentCandidate, "candidate disagrees with sigma on " + model.named()[q].name);

  const std::size_t nb = model.cells().size() + model.named().size();
  for (unsigned long long pick = 1; pick < (1ULL << nb); ++pick) {
    const Event b = prior_event(model, pick);
    const Rational pb = model.prior(b);
    for (unsigned long long fm = 0; fm < (1ULL << n); ++fm) {
      const Event f = Event::from_mask(n, fm);
      auto [lo, hi] = bounds_over(model, f, b, false);
      const Rational p = mass_of(candidate, f & b);
      if (p < pb * lo || p > pb * hi) {
        CongReport rep;
        rep.ok = false;
        rep.f = f;
        rep.b = b;
        rep.k = qs.omega();
        rep.detail = "P(F&B) = " + to_string(p) + " outside [" + to_string(pb * lo) + ", " + to_string(pb * hi) + "]";
        return rep;
      }
    }
  }
  return {};
}

// Conditional prior on residual rows may sit on finite index sets, so genuine inf/sup are used here.
CongReport check_full_strong_conglomerability(const ProfileModel& model, const LayeredConditional& q) {
  check_size(model);
  const AtomSpace& qs = model.quotient();
  const std::size_t n = qs.atom_count();
  if (q.atom_count() != n) throw Error(ErrorCode::InconsistentCandidate, "candidate has wrong atom count");
  const Event omega = qs.omega();
  for (std::size_t c = 0; c < model.cells().size(); ++c)
    if (q.evaluate(model.cell_event(c), omega) != model.cells()[c].weight)
      throw Error(ErrorCode::InconsistentCandidate, "candidate does not extend the prior on " + model.cells()[c].name);
  for (std::size_t i = 0; i < model.named().size(); ++i) {
    const Event row = qs.row(model.named_row(i));
    if (q.evaluate(row, omega) != model.named()[i].mass)
      throw Error(ErrorCode::InconsistentCandidate, "candidate does not extend the prior on " + model.named()[i].name);
    for (auto a : qs.row_atoms(model.named_row(i)))
      if (q.evaluate(qs.atom(a), row) != model.named()[i].sigma[qs.atom_col(a)])
        throw Error(ErrorCode::InconsistentCandidate, "candidate disagrees with sigma on " + model.named()[i].name);
  }

  const std::size_t nb = model.cells().size() + model.named().size();
  for (unsigned long long kp = 1; kp < (1ULL << nb); ++kp) {
    const Event k = prior_event(model, kp);
    for (unsigned long long bp = kp;; bp = (bp - 1) & kp) {
      if (bp == 0) break;
      const Event b = prior_event(model, bp);
      const Rational qb = q.evaluate(b, k);
      for (unsigned long long fm = 0; fm < (1ULL << n); ++fm) {
        const Event f = Event::from_mask(n, fm);
        auto [lo, hi] = bounds_over(model, f, b, true);
        const Rational v = q.evaluate(f & b, k);
        if (v < qb * lo || v > qb * hi) {
          CongReport rep;
          rep.ok = false;
          rep.f = f;
          rep.b = b;
          rep.k = k;
          rep.detail = "Q(F&B|K) = " + to_string(v) + " outside [" + to_string(qb * lo) + ", " + to_string(qb * hi) + "]";
          return rep;
        }
      }
    }
  }
  return {};
}

}  // namespace condenv
