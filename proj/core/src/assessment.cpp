#include "condenv/assessment.hpp"

#include "condenv/error.hpp"

namespace condenv {

Prior::Prior(const AtomSpace& space, std::vector<std::vector<std::size_t>> block_rows, std::vector<Rational> mass)
    : block_rows_(std::move(block_rows)), mass_(std::move(mass)) {
  if (block_rows_.size() != mass_.size())
    throw Error(ErrorCode::InvalidInput, "prior: block and mass counts differ");
  row_block_.assign(space.n_conditioning(), block_rows_.size());
  for (std::size_t k = 0; k < block_rows_.size(); ++k) {
    if (block_rows_[k].empty()) throw Error(ErrorCode::InvalidInput, "prior: empty block");
    for (auto i : block_rows_[k]) {
      if (i >= space.n_conditioning()) throw Error(ErrorCode::BadIndex, "prior: no cell H" + std::to_string(i + 1));
      if (row_block_[i] != block_rows_.size())
        throw Error(ErrorCode::InvalidInput, "prior: H" + std::to_string(i + 1) + " in two blocks");
      row_block_[i] = k;
    }
  }
  for (std::size_t i = 0; i < row_block_.size(); ++i)
    if (row_block_[i] == block_rows_.size())
      throw Error(ErrorCode::InvalidInput, "prior: H" + std::to_string(i + 1) + " in no block");
  Rational total = 0;
  for (const auto& m : mass_) {
    if (m < 0) throw Error(ErrorCode::InvalidInput, "prior: negative mass");
    total += m;
  }
  if (total != 1) throw Error(ErrorCode::InvalidInput, "prior: masses sum to " + to_string(total));
  sub_ = Subalgebra::from_rows(space, block_rows_);
}

Prior Prior::on_cells(const AtomSpace& space, std::vector<Rational> mass) {
  std::vector<std::vector<std::size_t>> rows;
  for (std::size_t i = 0; i < space.n_conditioning(); ++i) rows.push_back({i});
  return Prior(space, std::move(rows), std::move(mass));
}

bool Prior::singleton_blocks() const {
  for (const auto& b : block_rows_)
    if (b.size() != 1) return false;
  return true;
}

Rational Prior::of(const Event& e) const {
  if (!sub_.contains(e)) throw Error(ErrorCode::EventNotInPriorAlgebra, "event " + e.str() + " is not a block union");
  Rational s = 0;
  for (auto k : sub_.blocks_inside(e)) s += mass_[k];
  return s;
}

void StatisticalModel::validate(const AtomSpace& space) const {
  if (rows.size() != space.n_conditioning())
    throw Error(ErrorCode::InvalidInput, "model: expected " + std::to_string(space.n_conditioning()) + " rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != space.n_observable())
      throw Error(ErrorCode::InvalidInput, "model: row H" + std::to_string(i + 1) + " has wrong length");
    Rational total = 0;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] < 0) throw Error(ErrorCode::InvalidInput, "model: negative entry");
      if (!space.compatible(i, j) && rows[i][j] != 0)
        throw Error(ErrorCode::InvalidInput,
                    "model: mass on empty atom H" + std::to_string(i + 1) + "&E" + std::to_string(j + 1));
      total += rows[i][j];
    }
    if (total != 1) throw Error(ErrorCode::InvalidInput, "model: row H" + std::to_string(i + 1) + " sums to " + to_string(total));
  }
}

Strategy::Strategy(const AtomSpace& space, std::vector<Rational> atom_mass) : atom_mass_(std::move(atom_mass)) {
  if (atom_mass_.size() != space.atom_count()) throw Error(ErrorCode::InvalidInput, "strategy: wrong atom count");
  for (std::size_t i = 0; i < space.n_conditioning(); ++i) row_atoms_.push_back(space.row_atoms(i));
}

Rational Strategy::operator()(const Event& f, std::size_t i) const {
  Rational s = 0;
  for (auto a : row_atoms_.at(i))
    if (f.contains(a)) s += atom_mass_[a];
  return s;
}

Strategy strategy_from_model(const AtomSpace& space, const StatisticalModel& model) {
  model.validate(space);
  std::vector<Rational> mass(space.atom_count());
  for (std::size_t a = 0; a < space.atom_count(); ++a) mass[a] = model.rows[space.atom_row(a)][space.atom_col(a)];
  return Strategy(space, std::move(mass));
}

LayeredConditional::LayeredConditional(std::size_t atom_count, std::vector<std::vector<Rational>> layers)
    : atom_count_(atom_count), layers_(std::move(layers)) {
  for (const auto& l : layers_)
    if (l.size() != atom_count_) throw Error(ErrorCode::InvalidInput, "layer has wrong length");
}

Rational LayeredConditional::mass(std::size_t layer, const Event& e) const {
  Rational s = 0;
  e.for_each([&](std::size_t a) { s += layers_[layer][a]; });
  return s;
}

std::optional<std::size_t> LayeredConditional::first_layer(const Event& k) const {
  for (std::size_t l = 0; l < layers_.size(); ++l)
    if (mass(l, k) > 0) return l;
  return std::nullopt;
}

Rational LayeredConditional::evaluate(const Event& f, const Event& k) const {
  if (k.empty()) throw Error(ErrorCode::EmptyConditioning, "P(F|K) with K empty");
  auto l = first_layer(k);
  if (!l) throw Error(ErrorCode::InvalidInput, "layers do not reach " + k.str());
  return mass(*l, f & k) / mass(*l, k);
}

ConditionalTable::ConditionalTable(std::size_t atom_count) : n_(atom_count) {
  if (n_ > kMaxAtoms) throw Error(ErrorCode::GroundTooLarge, "conditional table limited to " + std::to_string(kMaxAtoms) + " atoms");
  values_.resize(std::size_t{1} << (2 * n_));
}

ConditionalTable ConditionalTable::from(const LayeredConditional& p) {
  ConditionalTable t(p.atom_count());
  const std::size_t n = p.atom_count();
  const unsigned long long top = 1ULL << n;
  std::vector<std::vector<Rational>> mass(p.layers().size(), std::vector<Rational>(top));
  for (std::size_t l = 0; l < p.layers().size(); ++l)
    for (unsigned long long m = 1; m < top; ++m) {
      unsigned long long low = m & (~m + 1);
      std::size_t a = static_cast<std::size_t>(__builtin_ctzll(low));
      mass[l][m] = mass[l][m ^ low] + p.layers()[l][a];
    }
  for (unsigned long long k = 1; k < top; ++k) {
    std::size_t l = 0;
    while (l < mass.size() && mass[l][k] <= 0) ++l;
    if (l == mass.size()) throw Error(ErrorCode::InvalidInput, "layers do not reach every event");
    for (unsigned long long f = 0; f < top; ++f) t.set(f, k, mass[l][f & k] / mass[l][k]);
  }
  return t;
}

namespace {

FcpReport violation(std::size_t n, const std::string& cond, unsigned long long e, unsigned long long f,
                    unsigned long long h, std::string detail) {
  FcpReport r;
  r.ok = false;
  r.condition = cond;
  r.e = Event::from_mask(n, e);
  r.f = Event::from_mask(n, f);
  r.h = Event::from_mask(n, h);
  r.detail = std::move(detail);
  return r;
}

}  // namespace

FcpReport validate_full_conditional(const ConditionalTable& t) {
  const std::size_t n = t.atom_count();
  const unsigned long long top = 1ULL << n;
  for (unsigned long long h = 1; h < top; ++h) {
    for (unsigned long long e = 0; e < top; ++e) {
      if (t.get(e, h) != t.get(e & h, h))
        return violation(n, "C1", e, 0, h, "P(E|H) != P(E&H|H)");
      if (t.get(e, h) < 0) return violation(n, "C2", e, 0, h, "negative value");
    }
    if (t.get(top - 1, h) != 1) return violation(n, "C2", top - 1, 0, h, "P(Omega|H) != 1");
    for (unsigned long long e = 1; e < top; ++e) {
      unsigned long long low = e & (~e + 1);
      if (t.get(e, h) != t.get(e ^ low, h) + t.get(low, h))
        return violation(n, "C2", e ^ low, low, h, "P(.|H) not additive");
    }
  }
  for (unsigned long long h = 1; h < top; ++h) {
    for (unsigned long long e = h;; e = (e - 1) & h) {
      if (e != 0) {
        for (unsigned long long f = h;; f = (f - 1) & h) {
          if (t.get(e & f, h) != t.get(e, h) * t.get(f, e))
            return violation(n, "C3", e, f, h, "P(E&F|H) != P(E|H) P(F|E&H)");
          if (f == 0) break;
        }
      }
      if (e == 0) break;
    }
  }
  return {};
}

FcpReport validate_full_conditional(const LayeredConditional& p) {
  const std::size_t n = p.atom_count();
  std::vector<int> owner(n, -1);
  for (std::size_t l = 0; l < p.layers().size(); ++l) {
    Rational total = 0;
    for (std::size_t a = 0; a < n; ++a) {
      const Rational& x = p.layers()[l][a];
      if (x < 0) {
        FcpReport r;
        r.ok = false;
        r.condition = "C2";
        r.detail = "layer " + std::to_string(l) + " has negative mass on atom " + std::to_string(a);
        return r;
      }
      if (x > 0) {
        if (owner[a] >= 0) {
          FcpReport r;
          r.ok = false;
          r.condition = "C3";
          r.detail = "atom " + std::to_string(a) + " carries mass in layers " + std::to_string(owner[a]) + " and " +
                     std::to_string(l);
          return r;
        }
        owner[a] = static_cast<int>(l);
      }
      total += x;
    }
    if (total != 1) {
      FcpReport r;
      r.ok = false;
      r.condition = "C2";
      r.detail = "layer " + std::to_string(l) + " sums to " + to_string(total);
      return r;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (owner[a] < 0) {
      FcpReport r;
      r.ok = false;
      r.condition = "C1";
      r.detail = "atom " + std::to_string(a) + " is reached by no layer";
      return r;
    }
  if (n > ConditionalTable::kMaxAtoms) {
    FcpReport r;
    r.exhaustive = false;
    return r;
  }
  return validate_full_conditional(ConditionalTable::from(p));
}

bool extends_assessment(const AtomSpace& space, const LayeredConditional& p, const Prior& prior,
                        const Strategy& sigma) {
  const Event omega = space.omega();
  for (std::size_t k = 0; k < prior.block_count(); ++k)
    if (p.evaluate(prior.sub().block(k), omega) != prior.mass()[k]) return false;
  for (std::size_t i = 0; i < space.n_conditioning(); ++i) {
    const Event h = space.row(i);
    auto l = p.first_layer(h);
    if (!l) return false;
    const Rational hm = p.mass(*l, h);
    for (auto a : space.row_atoms(i))
      if (p.layers()[*l][a] / hm != sigma.atom_mass(a)) return false;
  }
  return true;
}

LayeredConditional canonical_extension(const AtomSpace& space, const Prior& prior, const Strategy& sigma) {
  const std::size_t n = space.atom_count();
  std::vector<std::vector<Rational>> layers;
  std::vector<bool> covered(n, false);

  std::vector<Rational> l0(n);
  std::vector<std::size_t> null_rows;
  for (std::size_t k = 0; k < prior.block_count(); ++k) {
    const auto& rows = prior.block_rows()[k];
    if (prior.mass()[k] == 0) {
      null_rows.insert(null_rows.end(), rows.begin(), rows.end());
      continue;
    }
    Rational share = prior.mass()[k] / Rational(static_cast<long>(rows.size()));
    for (auto i : rows)
      for (auto a : space.row_atoms(i)) l0[a] = share * sigma.atom_mass(a);
  }
  layers.push_back(l0);

  if (!null_rows.empty()) {
    std::vector<Rational> l1(n);
    Rational share = Rational(1) / Rational(static_cast<long>(null_rows.size()));
    for (auto i : null_rows)
      for (auto a : space.row_atoms(i)) l1[a] = share * sigma.atom_mass(a);
    layers.push_back(l1);
  }
  for (const auto& l : layers)
    for (std::size_t a = 0; a < n; ++a)
      if (l[a] > 0) covered[a] = true;
  std::size_t rest = 0;
  for (std::size_t a = 0; a < n; ++a) rest += covered[a] ? 0 : 1;
  if (rest > 0) {
    std::vector<Rational> tail(n);
    for (std::size_t a = 0; a < n; ++a)
      if (!covered[a]) tail[a] = Rational(1) / Rational(static_cast<long>(rest));
    layers.push_back(tail);
  }
  return LayeredConditional(n, std::move(layers));
}

}  // namespace condenv
