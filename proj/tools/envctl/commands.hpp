#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "condenv/envelopes.hpp"
#include "condenv/rational.hpp"

namespace envctl {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kUnsupported = 3 };

struct BayesOptions {
  unsigned grid = 0;
  unsigned n = 0;
  condenv::Rational theta1, theta2;
  unsigned doublings = 1;
};

struct BayesRow {
  unsigned k = 0;
  condenv::Rational value;       // lower fully disintegrable envelope of theta in (theta1, theta2] given X = n
  condenv::Rational limit;       // theta2^(n+1) - theta1^(n+1)
  condenv::Rational predictive;  // P^d(X = n)
};

// Grid theta_j = j/k, j = 0..k, uniform prior, binomial likelihood; atoms of zero likelihood are excluded.
condenv::Instance bayes_instance(unsigned k, unsigned n);
std::vector<BayesRow> bayes_table(const BayesOptions& opt);

int cmd_check(const std::string& file, bool witness, bool json, std::ostream& out);
int cmd_envelope(const std::string& file, const std::string& kind, bool oracle, bool json, std::ostream& out);
int cmd_bayes(const BayesOptions& opt, bool json, std::ostream& out);
int cmd_capacity(const std::string& file, bool json, std::ostream& out);

// Full command line entry point; errors are reported on `err` and mapped to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace envctl
