#include "condenv/coherence.hpp"

#include "condenv/error.hpp"
#include "condenv/lp.hpp"

namespace condenv {

void ConditionalAssessment::add(Event f, Event k, Rational value) {
  if (k.empty()) throw Error(ErrorCode::EmptyConditioning, "assessment entry with empty conditioning event");
  if (value < 0 || value > 1) throw Error(ErrorCode::InvalidInput, "assessed value " + to_string(value) + " outside [0,1]");
  if (f.universe() != k.universe()) throw Error(ErrorCode::InvalidInput, "events over different spaces");
  f &= k;
  entries_.push_back({std::move(f), std::move(k), std::move(value)});
}

namespace {

using Open = std::vector<std::size_t>;

// Variables are the atoms of `domain`, in increasing order.
struct Frame {
  std::vector<std::size_t> atoms;
  std::vector<std::size_t> var;  // atom -> variable, npos outside the domain

  explicit Frame(const Event& domain) : var(domain.universe(), npos) {
    domain.for_each([&](std::size_t a) {
      var[a] = atoms.size();
      atoms.push_back(a);
    });
  }
  std::size_t size() const { return atoms.size(); }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::vector<Rational> indicator(const Event& e, std::size_t width) const {
    std::vector<Rational> row(width);
    e.for_each([&](std::size_t a) {
      if (var[a] != npos) row[var[a]] = 1;
    });
    return row;
  }
};

Event open_support(const std::vector<ConditionalEntry>& es, const Open& open, std::size_t n) {
  Event h(n);
  for (auto e : open) h |= es[e].k;
  return h;
}

// y(F&K) - v y(K) = 0 for every open entry.
void add_homogeneous(LinearProgram& lp, const Frame& fr, const std::vector<ConditionalEntry>& es, const Open& open) {
  for (auto e : open) {
    std::vector<Rational> row(lp.variables());
    bool any = false;
    es[e].k.for_each([&](std::size_t a) {
      const std::size_t v = fr.var[a];
      if (v == Frame::npos) return;
      row[v] = es[e].f.contains(a) ? Rational(1 - es[e].value) : Rational(-es[e].value);
      any = true;
    });
    if (any) lp.add_eq(std::move(row), 0);
  }
}

std::vector<Rational> normalized_layer(const Frame& fr, const std::vector<Rational>& y, std::size_t n) {
  Rational total = 0;
  for (std::size_t v = 0; v < fr.size(); ++v) total += y[v];
  std::vector<Rational> layer(n);
  for (std::size_t v = 0; v < fr.size(); ++v)
    if (sgn(y[v]) != 0) layer[fr.atoms[v]] = y[v] / total;
  return layer;
}

Open still_open(const std::vector<ConditionalEntry>& es, const Open& open, const std::vector<Rational>& layer) {
  Open out;
  for (auto e : open) {
    bool hit = false;
    es[e].k.for_each([&](std::size_t a) { hit = hit || sgn(layer[a]) != 0; });
    if (!hit) out.push_back(e);
  }
  return out;
}

// Layer covering as many open conditioning events as possible while giving `forbidden` no mass.
std::optional<std::vector<Rational>> max_cover(const std::vector<ConditionalEntry>& es, const Open& open,
                                               const Event& forbidden) {
  const std::size_t n = forbidden.universe();
  const Event domain = open_support(es, open, n) - forbidden;
  if (domain.empty()) return std::nullopt;
  Frame fr(domain);

  std::vector<Event> ks;
  for (auto e : open) {
    const Event kd = es[e].k & domain;
    if (kd.empty()) continue;
    bool seen = false;
    for (const auto& k : ks) seen = seen || k == kd;
    if (!seen) ks.push_back(kd);
  }
  const std::size_t width = fr.size() + ks.size();
  LinearProgram lp(width);
  add_homogeneous(lp, fr, es, open);
  for (std::size_t q = 0; q < ks.size(); ++q) {
    auto row = fr.indicator(ks[q], width);
    for (auto& x : row) x = -x;
    row[fr.size() + q] = 1;
    lp.add_le(std::move(row), 0);
    std::vector<Rational> cap(width);
    cap[fr.size() + q] = 1;
    lp.add_le(std::move(cap), 1);
  }
  std::vector<Rational> c(width);
  for (std::size_t q = 0; q < ks.size(); ++q) c[fr.size() + q] = 1;
  lp.set_objective(std::move(c), LinearProgram::Sense::Maximize);
  auto r = lp.solve();
  if (!r.optimal() || sgn(r.value) == 0) return std::nullopt;
  r.x.resize(fr.size());
  return normalized_layer(fr, r.x, n);
}

// LP for covering k at this stage: y on open support plus k, homogeneous constraints, y(k) = 1.
LinearProgram covering_lp(const std::vector<ConditionalEntry>& es, const Open& open, const Event& k, Frame& fr) {
  fr = Frame(open_support(es, open, k.universe()) | k);
  LinearProgram lp(fr.size());
  add_homogeneous(lp, fr, es, open);
  lp.add_eq(fr.indicator(k, fr.size()), 1);
  return lp;
}

std::optional<Interval> stage_interval(const std::vector<ConditionalEntry>& es, const Open& open, const Event& f,
                                       const Event& k) {
  Frame fr(k);
  LinearProgram lp = covering_lp(es, open, k, fr);
  lp.set_objective(fr.indicator(f & k, fr.size()), LinearProgram::Sense::Minimize);
  auto lo = lp.solve();
  if (!lo.optimal()) return std::nullopt;
  lp.set_objective(fr.indicator(f & k, fr.size()), LinearProgram::Sense::Maximize);
  auto hi = lp.solve();
  return Interval{lo.value, hi.value};
}

void finish_layers(std::vector<std::vector<Rational>>& layers, std::size_t n) {
  std::vector<bool> used(n, false);
  for (const auto& l : layers)
    for (std::size_t a = 0; a < n; ++a) used[a] = used[a] || sgn(l[a]) != 0;
  std::size_t rest = 0;
  for (bool u : used) rest += u ? 0 : 1;
  if (rest == 0) return;
  std::vector<Rational> tail(n);
  for (std::size_t a = 0; a < n; ++a)
    if (!used[a]) tail[a] = Rational(1, static_cast<unsigned long>(rest));
  layers.push_back(std::move(tail));
}

// Layer descent from `open`; false if some layer cannot be built.
bool descend(const std::vector<ConditionalEntry>& es, Open open, std::size_t n,
             std::vector<std::vector<Rational>>& layers, Open* stuck = nullptr) {
  const Event none(n);
  while (!open.empty()) {
    auto layer = max_cover(es, open, none);
    if (!layer) {
      if (stuck) *stuck = open;
      return false;
    }
    open = still_open(es, open, *layer);
    layers.push_back(std::move(*layer));
  }
  return true;
}

Open all_entries(const ConditionalAssessment& a) {
  Open open(a.size());
  for (std::size_t e = 0; e < open.size(); ++e) open[e] = e;
  return open;
}

// Open sets at successive stages while the target k is kept at zero mass.
std::vector<Open> target_stages(const std::vector<ConditionalEntry>& es, Open open, const Event& k,
                                std::vector<std::vector<Rational>>* layers = nullptr) {
  std::vector<Open> stages;
  for (;;) {
    stages.push_back(open);
    if (open.empty()) break;
    auto layer = max_cover(es, open, k);
    if (!layer) break;
    open = still_open(es, open, *layer);
    if (layers) layers->push_back(std::move(*layer));
  }
  return stages;
}

Interval trivial_or(const Event& f, const Event& k, bool& trivial) {
  trivial = true;
  if (k.subset_of(f)) return {1, 1};
  if (!f.intersects(k)) return {0, 0};
  trivial = false;
  return {};
}

Interval union_of_stages(const std::vector<ConditionalEntry>& es, const std::vector<Open>& stages, const Event& f,
                         const Event& k) {
  std::optional<Interval> out;
  for (const auto& open : stages) {
    auto iv = stage_interval(es, open, f, k);
    if (!iv) continue;
    if (!out) {
      out = iv;
    } else {
      if (iv->lo < out->lo) out->lo = iv->lo;
      if (iv->hi > out->hi) out->hi = iv->hi;
    }
    if (sgn(out->lo) == 0 && out->hi == 1) break;
  }
  if (!out) throw Error(ErrorCode::IncoherentBase, "no stage admits the target conditioning event");
  return *out;
}

}  // namespace

CoherenceResult check_coherence(const AtomSpace& space, const ConditionalAssessment& a) {
  const std::size_t n = space.atom_count();
  CoherenceResult r;
  std::vector<std::vector<Rational>> layers;
  Open stuck;
  if (!descend(a.entries(), all_entries(a), n, layers, &stuck)) {
    r.failed_layer = layers.size();
    r.uncovered = stuck;
    return r;
  }
  finish_layers(layers, n);
  r.coherent = true;
  r.witness = LayeredConditional(n, std::move(layers));
  return r;
}

Interval extension_interval(const AtomSpace& space, const ConditionalAssessment& a, const Event& f, const Event& k) {
  if (k.empty()) throw Error(ErrorCode::EmptyConditioning, "target conditioning event is empty");
  if (!check_coherence(space, a).coherent) throw Error(ErrorCode::IncoherentBase, "assessment is not coherent");
  bool trivial = false;
  Interval t = trivial_or(f, k, trivial);
  if (trivial) return t;
  return union_of_stages(a.entries(), target_stages(a.entries(), all_entries(a), k), f, k);
}

LayeredConditional witness_extension(const AtomSpace& space, const ConditionalAssessment& a, const Event& f,
                                     const Event& k, const Rational& v) {
  const Interval iv = extension_interval(space, a, f, k);
  if (!iv.contains(v))
    throw Error(ErrorCode::ValueOutsideInterval,
                to_string(v) + " outside [" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]");
  const std::size_t n = space.atom_count();
  const auto& es = a.entries();
  std::vector<std::vector<Rational>> before;
  const auto stages = target_stages(es, all_entries(a), k, &before);
  for (std::size_t s = 0; s < stages.size(); ++s) {
    auto si = stage_interval(es, stages[s], f, k);
    if (!si || !si->contains(v)) continue;
    Frame fr(k);
    LinearProgram lp = covering_lp(es, stages[s], k, fr);
    lp.add_eq(fr.indicator(f & k, fr.size()), v);
    auto r = lp.feasible_point();
    if (!r.optimal()) continue;
    std::vector<std::vector<Rational>> layers(before.begin(), before.begin() + static_cast<std::ptrdiff_t>(s));
    layers.push_back(normalized_layer(fr, r.x, n));
    if (!descend(es, still_open(es, stages[s], layers.back()), n, layers))
      throw Error(ErrorCode::IncoherentBase, "descent failed after the target layer");
    finish_layers(layers, n);
    return LayeredConditional(n, std::move(layers));
  }
  throw Error(ErrorCode::ValueOutsideInterval, "no stage attains " + to_string(v));
}

ConditionalAssessment assessment_from_prior_strategy(const AtomSpace& space, const Prior& prior,
                                                     const Strategy& sigma) {
  ConditionalAssessment a;
  const Event omega = space.omega();
  for (std::size_t b = 0; b < prior.block_count(); ++b) a.add(prior.sub().block(b), omega, prior.mass()[b]);
  for (std::size_t a_ = 0; a_ < space.atom_count(); ++a_)
    a.add(space.atom(a_), space.row(space.atom_row(a_)), sigma.atom_mass(a_));
  return a;
}

ExtensionOracle::ExtensionOracle(const AtomSpace& space, ConditionalAssessment a)
    : space_(&space), a_(std::move(a)) {
  coherent_ = check_coherence(space, a_).coherent;
}

Interval ExtensionOracle::interval(const Event& f, const Event& k) {
  if (!coherent_) throw Error(ErrorCode::IncoherentBase, "assessment is not coherent");
  if (k.empty()) throw Error(ErrorCode::EmptyConditioning, "target conditioning event is empty");
  bool trivial = false;
  Interval t = trivial_or(f, k, trivial);
  if (trivial) return t;
  auto it = stages_.find(k);
  if (it == stages_.end()) it = stages_.emplace(k, target_stages(a_.entries(), all_entries(a_), k)).first;
  return union_of_stages(a_.entries(), it->second, f, k);
}

}  // namespace condenv
