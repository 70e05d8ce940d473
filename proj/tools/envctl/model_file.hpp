#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "condenv/algebra.hpp"
#include "condenv/capacity.hpp"
#include "condenv/coherence.hpp"
#include "condenv/countable.hpp"
#include "condenv/envelopes.hpp"
#include "condenv/rational.hpp"

namespace envctl {

using condenv::Rational;

struct AssessmentLine {
  std::string f, k;
  Rational value;
  friend bool operator==(const AssessmentLine&, const AssessmentLine&) = default;
};

struct QueryLine {
  std::string f, k;
  friend bool operator==(const QueryLine&, const QueryLine&) = default;
};

struct CellLine {
  std::string name;
  Rational weight;
  std::vector<std::string> profiles;
  friend bool operator==(const CellLine&, const CellLine&) = default;
};

struct TailLine {
  std::string profile;
  std::string columns;
  condenv::TailSpec spec;
  friend bool operator==(const TailLine& a, const TailLine& b);
};

struct CapacityLine {
  std::vector<std::string> subset;
  Rational value;
  friend bool operator==(const CapacityLine&, const CapacityLine&) = default;
};

struct IntegrandLine {
  std::string name;
  std::vector<Rational> values;
  friend bool operator==(const IntegrandLine&, const IntegrandLine&) = default;
};

// Parsed model description. Finite models use [space], [prior] and [model]; countable ones use
// [profiles]; capacity files use [capacity] and [integrands].
struct ModelFile {
  std::size_t n_conditioning = 0;
  std::size_t n_observable = 0;
  std::vector<std::pair<std::size_t, std::size_t>> excluded;  // 1-based (i, j)
  std::vector<std::vector<std::size_t>> blocks;                // 1-based rows; empty means one block per row
  std::vector<Rational> prior;
  std::vector<std::vector<Rational>> model;
  std::vector<AssessmentLine> assessments;
  std::vector<std::pair<std::string, std::string>> events;
  std::vector<QueryLine> queries;

  bool has_profiles = false;
  std::size_t profile_observable = 0;
  std::vector<condenv::Profile> profiles;
  std::vector<condenv::NamedIndex> named;
  std::vector<CellLine> cells;
  std::vector<TailLine> tails;

  std::vector<std::string> capacity_ground;
  std::vector<CapacityLine> capacity;
  std::vector<IntegrandLine> integrands;

  bool finite() const { return n_conditioning > 0; }
  bool is_capacity() const { return !capacity_ground.empty(); }

  friend bool operator==(const ModelFile& a, const ModelFile& b);
};

ModelFile parse_model(std::string_view text, const std::string& source = "<input>");
ModelFile load_model(const std::string& path);
std::string serialize(const ModelFile& m);

condenv::AtomSpace build_space(const ModelFile& m);
condenv::Instance build_instance(const ModelFile& m);
condenv::ProfileModel build_profile_model(const ModelFile& m);
condenv::Capacity build_capacity(const ModelFile& m);

// Named events: [events] aliases, plus profile, cell and named-index names for countable models.
std::map<std::string, condenv::Event> build_aliases(const ModelFile& m, const condenv::AtomSpace& space);

}  // namespace envctl
