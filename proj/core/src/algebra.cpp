#include "condenv/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "condenv/error.hpp"

namespace condenv {

std::vector<std::size_t> Event::atoms() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t a) { out.push_back(a); });
  return out;
}

unsigned long long Event::mask() const {
  unsigned long long m = 0;
  for_each([&](std::size_t a) {
    if (a < 64) m |= 1ULL << a;
  });
  return m;
}

Event Event::from_mask(std::size_t universe, unsigned long long mask) {
  Event e(universe);
  for (std::size_t a = 0; a < universe && a < 64; ++a)
    if (mask >> a & 1ULL) e.insert(a);
  return e;
}

std::string Event::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](std::size_t a) {
    if (!first) os << ',';
    os << a;
    first = false;
  });
  os << '}';
  return os.str();
}

AtomSpace AtomSpace::build(const std::vector<std::vector<bool>>& compat) {
  if (compat.empty() || compat.front().empty())
    throw Error(ErrorCode::EmptyRowOrColumn, "compatibility matrix is empty");
  const std::size_t m = compat.front().size();
  for (const auto& row : compat)
    if (row.size() != m) throw Error(ErrorCode::InvalidInput, "ragged compatibility matrix");

  AtomSpace s;
  s.compat_ = compat;
  s.index_.assign(compat.size(), std::vector<std::optional<std::size_t>>(m));
  s.row_atoms_.assign(compat.size(), {});
  std::vector<bool> col_hit(m, false);
  for (std::size_t i = 0; i < compat.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!compat[i][j]) continue;
      s.index_[i][j] = s.cells_.size();
      s.row_atoms_[i].push_back(s.cells_.size());
      s.cells_.emplace_back(i, j);
      col_hit[j] = true;
    }
    if (s.row_atoms_[i].empty())
      throw Error(ErrorCode::EmptyRowOrColumn, "H" + std::to_string(i + 1) + " has no compatible atom");
  }
  for (std::size_t j = 0; j < m; ++j)
    if (!col_hit[j])
      throw Error(ErrorCode::EmptyRowOrColumn, "E" + std::to_string(j + 1) + " has no compatible atom");
  return s;
}

AtomSpace AtomSpace::full(std::size_t n_conditioning, std::size_t n_observable) {
  return build(std::vector<std::vector<bool>>(n_conditioning, std::vector<bool>(n_observable, true)));
}

std::optional<std::size_t> AtomSpace::atom_index(std::size_t i, std::size_t j) const {
  if (i >= index_.size() || j >= n_observable()) return std::nullopt;
  return index_[i][j];
}

Event AtomSpace::omega() const { return ~none(); }

Event AtomSpace::row(std::size_t i) const {
  if (i >= n_conditioning()) throw Error(ErrorCode::BadIndex, "no cell H" + std::to_string(i + 1));
  Event e = none();
  for (auto a : row_atoms_[i]) e.insert(a);
  return e;
}

Event AtomSpace::column(std::size_t j) const {
  if (j >= n_observable()) throw Error(ErrorCode::BadIndex, "no cell E" + std::to_string(j + 1));
  Event e = none();
  for (std::size_t i = 0; i < n_conditioning(); ++i)
    if (index_[i][j]) e.insert(*index_[i][j]);
  return e;
}

Event AtomSpace::atom(std::size_t a) const {
  if (a >= atom_count()) throw Error(ErrorCode::BadIndex, "no atom " + std::to_string(a));
  Event e = none();
  e.insert(a);
  return e;
}

std::vector<std::size_t> AtomSpace::rows_meeting(const Event& e) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_conditioning(); ++i)
    for (auto a : row_atoms_[i])
      if (e.contains(a)) {
        out.push_back(i);
        break;
      }
  return out;
}

std::vector<std::size_t> AtomSpace::rows_inside(const Event& e) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_conditioning(); ++i) {
    bool inside = true;
    for (auto a : row_atoms_[i]) inside = inside && e.contains(a);
    if (inside) out.push_back(i);
  }
  return out;
}

Event AtomSpace::row_hull(const Event& e) const {
  Event h = none();
  for (auto i : rows_meeting(e))
    for (auto a : row_atoms_[i]) h.insert(a);
  return h;
}

std::string AtomSpace::atom_label(std::size_t a) const {
  return "H" + std::to_string(atom_row(a) + 1) + "&E" + std::to_string(atom_col(a) + 1);
}

namespace {

class EventParser {
 public:
  EventParser(const AtomSpace& space, std::string_view text, const std::map<std::string, Event>& aliases)
      : space_(space), text_(text), aliases_(aliases) {}

  Event parse() {
    Event e = parse_or();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  Event parse_or() {
    Event e = parse_and();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '+') {
        ++pos_;
        e |= parse_and();
      } else {
        return e;
      }
    }
  }

  Event parse_and() {
    Event e = parse_unary();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '&') {
        ++pos_;
        e &= parse_unary();
      } else {
        return e;
      }
    }
  }

  Event parse_unary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      return ~parse_unary();
    }
    if (c == '(') {
      ++pos_;
      Event e = parse_or();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return e;
    }
    std::string word;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '.'))
      word += text_[pos_++];
    if (word.empty()) fail("expected an event name");
    if (auto it = aliases_.find(word); it != aliases_.end()) return it->second;
    if (word == "Omega") return space_.omega();
    if (word == "empty") return space_.none();
    if ((word[0] == 'H' || word[0] == 'E') && word.size() > 1) {
      std::size_t idx = 0;
      for (std::size_t k = 1; k < word.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(word[k]))) fail("unknown event '" + word + "'");
        idx = idx * 10 + static_cast<std::size_t>(word[k] - '0');
      }
      if (idx == 0) throw Error(ErrorCode::BadIndex, word + ": indices are 1-based");
      if (word[0] == 'H') {
        if (idx > space_.n_conditioning()) throw Error(ErrorCode::BadIndex, word + " out of range");
        return space_.row(idx - 1);
      }
      if (idx > space_.n_observable()) throw Error(ErrorCode::BadIndex, word + " out of range");
      return space_.column(idx - 1);
    }
    throw Error(ErrorCode::BadIndex, "unknown event '" + word + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorCode::ParseError, msg + " at column " + std::to_string(pos_ + 1) + " in '" +
                                           std::string(text_) + "'");
  }

  const AtomSpace& space_;
  std::string_view text_;
  const std::map<std::string, Event>& aliases_;
  std::size_t pos_ = 0;
};

}  // namespace

Event event_of(const AtomSpace& space, std::string_view expression, const std::map<std::string, Event>& aliases) {
  return EventParser(space, expression, aliases).parse();
}

Subalgebra::Subalgebra(const AtomSpace& space, std::vector<Event> blocks)
    : universe_(space.atom_count()), blocks_(std::move(blocks)) {
  Event seen = space.none();
  for (const auto& b : blocks_) {
    if (b.universe() != universe_) throw Error(ErrorCode::InvalidInput, "block over a different space");
    if (b.empty()) throw Error(ErrorCode::InvalidInput, "empty block");
    if (b.intersects(seen)) throw Error(ErrorCode::InvalidInput, "overlapping blocks");
    seen |= b;
  }
  if (!seen.full()) throw Error(ErrorCode::InvalidInput, "blocks do not cover every atom");
}

Subalgebra Subalgebra::finest(const AtomSpace& space) {
  std::vector<Event> blocks;
  for (std::size_t a = 0; a < space.atom_count(); ++a) blocks.push_back(space.atom(a));
  return Subalgebra(space, std::move(blocks));
}

Subalgebra Subalgebra::from_rows(const AtomSpace& space, const std::vector<std::vector<std::size_t>>& groups) {
  std::vector<Event> blocks;
  for (const auto& g : groups) {
    Event b = space.none();
    for (auto i : g) b |= space.row(i);
    blocks.push_back(b);
  }
  return Subalgebra(space, std::move(blocks));
}

bool Subalgebra::contains(const Event& e) const {
  for (const auto& b : blocks_)
    if (b.intersects(e) && !b.subset_of(e)) return false;
  return true;
}

std::vector<std::size_t> Subalgebra::blocks_inside(const Event& e) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < blocks_.size(); ++k)
    if (blocks_[k].subset_of(e)) out.push_back(k);
  return out;
}

std::vector<std::size_t> Subalgebra::blocks_meeting(const Event& e) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < blocks_.size(); ++k)
    if (blocks_[k].intersects(e)) out.push_back(k);
  return out;
}

Event Subalgebra::union_of(const std::vector<std::size_t>& ks) const {
  Event e(universe_);
  for (auto k : ks) e |= blocks_.at(k);
  return e;
}

std::vector<std::vector<Event>> finite_partitions(const AtomSpace& space, const Subalgebra& sub,
                                                  std::size_t max_count) {
  (void)space;
  const std::size_t n = sub.size();
  std::vector<std::vector<Event>> out;
  if (n == 0 || max_count == 0) return out;

  out.push_back(sub.blocks());
  // Restricted growth strings enumerate set partitions of the block set.
  std::vector<std::size_t> rgs(n, 0);
  for (;;) {
    bool finest = true;
    for (std::size_t k = 0; k < n; ++k) finest = finest && rgs[k] == k;
    if (!finest) {
      if (out.size() >= max_count) break;
      std::size_t parts = *std::max_element(rgs.begin(), rgs.end()) + 1;
      std::vector<Event> p(parts, Event(sub.block(0).universe()));
      for (std::size_t k = 0; k < n; ++k) p[rgs[k]] |= sub.block(k);
      out.push_back(std::move(p));
    }
    std::size_t k = n - 1;
    while (k >= 1) {
      std::size_t mx = *std::max_element(rgs.begin(), rgs.begin() + static_cast<std::ptrdiff_t>(k));
      if (rgs[k] <= mx) {
        ++rgs[k];
        std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(k) + 1, rgs.end(), 0);
        break;
      }
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

bool gn_implies(const Event& e, const Event& h, const Event& f, const Event& k) {
  if (h.empty() || k.empty()) throw Error(ErrorCode::EmptyConditioning, "conditioning event is empty");
  return (e & h).subset_of(f & k) && (k - f).subset_of(h - e);
}

}  // namespace condenv
