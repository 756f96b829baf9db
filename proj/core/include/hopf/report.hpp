#pragma once

#include <span>
#include <string>
#include <vector>

#include "hopf/linalg.hpp"

namespace hopf {

// Outcome of one identity checked over its whole quantifier range.
struct CheckResult {
  std::string id;
  std::string quantifier;  // e.g. "a,b in basis(A)"
  bool pass = true;
  std::string counterexample;  // first failing instance, empty on pass
};

// Ordered collection of check results for one algebra. Renders as one line
// per identity: "<id> <algebra> PASS|FAIL [counterexample]".
struct Report {
  std::string algebra;
  std::vector<CheckResult> results;

  bool all_pass() const;
  const CheckResult* find(const std::string& id) const;
  void append(const Report& other);
  std::string to_text() const;
};

// Accumulates instances of one identity and keeps the first failure.
class Check {
 public:
  Check(std::string id, std::string quantifier)
      : result_{std::move(id), std::move(quantifier), true, {}} {}

  // Records an instance; `describe` is only invoked on the first failure.
  template <typename Describe>
  bool expect(bool holds, Describe&& describe) {
    if (!holds && result_.pass) {
      result_.pass = false;
      result_.counterexample = describe();
    }
    return holds;
  }
  void fail(std::string counterexample) {
    if (result_.pass) {
      result_.pass = false;
      result_.counterexample = std::move(counterexample);
    }
  }
  bool passing() const { return result_.pass; }
  CheckResult result() const { return result_; }

 private:
  CheckResult result_;
};

std::string format_vec(std::span<const Scalar> v);
// "lhs=... rhs=..." for scalars or coordinate vectors.
std::string mismatch(std::span<const Scalar> lhs, std::span<const Scalar> rhs);
std::string mismatch(const Scalar& lhs, const Scalar& rhs);

}  // namespace hopf
