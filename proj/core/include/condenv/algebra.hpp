#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace condenv {

// A set of atoms of an AtomSpace, stored as a bit mask.
class Event {
 public:
  using Bits = boost::dynamic_bitset<>;

  Event() = default;
  explicit Event(std::size_t universe) : bits_(universe) {}
  explicit Event(Bits bits) : bits_(std::move(bits)) {}

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool full() const { return bits_.all(); }
  bool contains(std::size_t atom) const { return bits_.test(atom); }
  void insert(std::size_t atom) { bits_.set(atom); }
  void erase(std::size_t atom) { bits_.reset(atom); }

  bool subset_of(const Event& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const Event& other) const { return bits_.intersects(other.bits_); }

  Event operator&(const Event& o) const { return Event(bits_ & o.bits_); }
  Event operator|(const Event& o) const { return Event(bits_ | o.bits_); }
  Event operator-(const Event& o) const { return Event(bits_ - o.bits_); }
  Event operator~() const { return Event(~bits_); }
  Event& operator&=(const Event& o) { bits_ &= o.bits_; return *this; }
  Event& operator|=(const Event& o) { bits_ |= o.bits_; return *this; }

  friend bool operator==(const Event& a, const Event& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const Event& a, const Event& b) { return a.bits_ < b.bits_; }

  std::vector<std::size_t> atoms() const;
  template <class F>
  void for_each(F&& f) const {
    for (auto a = bits_.find_first(); a != Bits::npos; a = bits_.find_next(a)) f(a);
  }

  // Low 64 atoms packed into an integer; used for exhaustive enumeration of small spaces.
  unsigned long long mask() const;
  static Event from_mask(std::size_t universe, unsigned long long mask);

  const Bits& bits() const { return bits_; }
  std::string str() const;

 private:
  Bits bits_;
};

struct EventHash {
  std::size_t operator()(const Event& e) const { return std::hash<Event::Bits>{}(e.bits()); }
};

// Finite grid of atoms H_i & E_j selected by a compatibility mask.
class AtomSpace {
 public:
  static AtomSpace build(const std::vector<std::vector<bool>>& compat);
  static AtomSpace full(std::size_t n_conditioning, std::size_t n_observable);

  std::size_t n_conditioning() const { return compat_.size(); }
  std::size_t n_observable() const { return compat_.empty() ? 0 : compat_.front().size(); }
  std::size_t atom_count() const { return cells_.size(); }
  const std::vector<std::vector<bool>>& compat() const { return compat_; }

  bool compatible(std::size_t i, std::size_t j) const { return compat_.at(i).at(j); }
  std::optional<std::size_t> atom_index(std::size_t i, std::size_t j) const;
  std::size_t atom_row(std::size_t atom) const { return cells_.at(atom).first; }
  std::size_t atom_col(std::size_t atom) const { return cells_.at(atom).second; }
  const std::vector<std::size_t>& row_atoms(std::size_t i) const { return row_atoms_.at(i); }

  Event omega() const;
  Event none() const { return Event(atom_count()); }
  Event row(std::size_t i) const;
  Event column(std::size_t j) const;
  Event atom(std::size_t a) const;

  // Rows whose cell meets (resp. lies inside) the event.
  std::vector<std::size_t> rows_meeting(const Event& e) const;
  std::vector<std::size_t> rows_inside(const Event& e) const;
  // Union of the rows meeting e; the smallest row union containing e.
  Event row_hull(const Event& e) const;
  bool is_row_union(const Event& e) const { return row_hull(e) == e; }

  std::string atom_label(std::size_t a) const;

  friend bool operator==(const AtomSpace& a, const AtomSpace& b) { return a.compat_ == b.compat_; }

 private:
  std::vector<std::vector<bool>> compat_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
  std::vector<std::vector<std::optional<std::size_t>>> index_;
  std::vector<std::vector<std::size_t>> row_atoms_;
};

// Parses expressions over H<i>, E<j> (1-based), Omega, empty and named aliases.
// Operators: ~ (not), & (and), + (or), parentheses.
Event event_of(const AtomSpace& space, std::string_view expression,
               const std::map<std::string, Event>& aliases = {});

// Partition of the atom set into blocks; the generated algebra is all block unions.
class Subalgebra {
 public:
  Subalgebra() = default;
  Subalgebra(const AtomSpace& space, std::vector<Event> blocks);
  static Subalgebra finest(const AtomSpace& space);
  // Blocks made of whole H-rows.
  static Subalgebra from_rows(const AtomSpace& space, const std::vector<std::vector<std::size_t>>& groups);

  std::size_t size() const { return blocks_.size(); }
  const std::vector<Event>& blocks() const { return blocks_; }
  const Event& block(std::size_t k) const { return blocks_.at(k); }
  bool contains(const Event& e) const;
  // Blocks contained in e, blocks meeting e.
  std::vector<std::size_t> blocks_inside(const Event& e) const;
  std::vector<std::size_t> blocks_meeting(const Event& e) const;
  Event union_of(const std::vector<std::size_t>& ks) const;

 private:
  std::size_t universe_ = 0;
  std::vector<Event> blocks_;
};

// Every partition of Omega into subalgebra events, finest first, at most max_count of them.
std::vector<std::vector<Event>> finite_partitions(const AtomSpace& space, const Subalgebra& sub,
                                                  std::size_t max_count = 100000);

// E|H implies F|K in the sense E&H <= F&K and E^c&H >= F^c&K.
bool gn_implies(const Event& e, const Event& h, const Event& f, const Event& k);

}  // namespace condenv
