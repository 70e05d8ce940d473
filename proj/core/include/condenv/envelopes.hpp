#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "condenv/algebra.hpp"
#include "condenv/assessment.hpp"
#include "condenv/rational.hpp"

namespace condenv {

struct Instance {
  AtomSpace space;
  Prior prior;
  Strategy sigma;

  static Instance from_model(AtomSpace space, Prior prior, const StatisticalModel& model);
};

struct IndexSets {
  std::vector<std::size_t> i1, i2, i3;
};

struct EnvelopeResult {
  Rational lower;
  Rational upper;
  std::string case_tag;        // branch giving the lower value
  std::string upper_case_tag;  // branch giving the lower value of the complement
  IndexSets sets;              // for F|K
  std::map<std::string, Rational> aux;
};

// Lower S-integral of sigma(F|.) over finite partitions of the prior algebra; the blocks themselves
// attain the supremum.
Rational lower_joint(const Instance& inst, const Event& f);
Rational upper_joint(const Instance& inst, const Event& f);
// Same supremum taken explicitly over enumerated partitions.
Rational lower_joint_by_partitions(const Instance& inst, const Event& f, std::size_t max_count = 100000);

IndexSets index_sets(const AtomSpace& space, const Event& f, const Event& k);

EnvelopeResult conditional_envelope(const Instance& inst, const Event& f, const Event& k);

Rational disintegrable_joint(const Instance& inst, const Event& f);
EnvelopeResult dis_extension_envelope(const Instance& inst, const Event& f, const Event& k);

EnvelopeResult conditional_prior_envelope(const Instance& inst, const Event& f, const Event& k);

EnvelopeResult fully_dis_envelope(const Instance& inst, const Event& f, const Event& k);

}  // namespace condenv
