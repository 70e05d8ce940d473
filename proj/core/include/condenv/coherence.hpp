#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "condenv/algebra.hpp"
#include "condenv/assessment.hpp"
#include "condenv/rational.hpp"

namespace condenv {

struct ConditionalEntry {
  Event f;
  Event k;
  Rational value;
};

class ConditionalAssessment {
 public:
  ConditionalAssessment() = default;

  void add(Event f, Event k, Rational value);
  const std::vector<ConditionalEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<ConditionalEntry> entries_;
};

struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

struct CoherenceResult {
  bool coherent = false;
  std::optional<LayeredConditional> witness;
  // On failure: the layer that could not be built and the entries still uncovered there.
  std::size_t failed_layer = 0;
  std::vector<std::size_t> uncovered;
};

CoherenceResult check_coherence(const AtomSpace& space, const ConditionalAssessment& a);

Interval extension_interval(const AtomSpace& space, const ConditionalAssessment& a, const Event& f, const Event& k);

LayeredConditional witness_extension(const AtomSpace& space, const ConditionalAssessment& a, const Event& f,
                                     const Event& k, const Rational& v);

// (B|Omega, pi(B)) for each prior block and (atom|H_i, sigma) for each atom.
ConditionalAssessment assessment_from_prior_strategy(const AtomSpace& space, const Prior& prior,
                                                     const Strategy& sigma);

// Extension intervals for many targets over one assessment; stage computations are shared
// between targets with the same conditioning event.
class ExtensionOracle {
 public:
  ExtensionOracle(const AtomSpace& space, ConditionalAssessment a);

  bool coherent() const { return coherent_; }
  Interval interval(const Event& f, const Event& k);

 private:
  const AtomSpace* space_;
  ConditionalAssessment a_;
  bool coherent_ = false;
  std::unordered_map<Event, std::vector<std::vector<std::size_t>>, EventHash> stages_;
};

}  // namespace condenv
