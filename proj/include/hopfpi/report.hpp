#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfpi/matrix.hpp"

namespace hopfpi {

// One counterexample: the basis tuple where an axiom failed and the two
// sides evaluated there.
struct CheckFailure {
  std::string axiom;
  std::vector<int> grades;  // participating grade indices
  std::vector<int> basis;   // input basis multi-index
  std::vector<std::string> lhs, rhs;
};

// Result of an axiom sweep.  Keeps the first few failures per axiom plus
// exact per-axiom failure totals; merging is deterministic.
class CheckReport {
 public:
  static constexpr int kMaxKeptPerAxiom = 5;

  bool pass() const { return total_failures_ == 0; }
  long total_failures() const { return total_failures_; }
  const std::vector<CheckFailure>& failures() const { return failures_; }
  const std::map<std::string, long>& failure_counts() const { return counts_; }
  const std::vector<std::string>& axioms_checked() const { return checked_; }
  const std::map<std::string, std::string>& formulas() const { return formulas_; }

  void note_checked(const std::string& axiom, const std::string& formula = "");
  void add_failure(CheckFailure f);
  // Folds another report in; a nonempty prefix is prepended to its axiom
  // names (used to tell the two Hopf structures of a brace apart).
  void merge(const CheckReport& o, const std::string& prefix = "");
  long count_for(const std::string& axiom) const;

  std::string to_text() const;

 private:
  std::vector<CheckFailure> failures_;
  std::map<std::string, long> counts_;
  std::map<std::string, int> kept_;
  std::vector<std::string> checked_;
  std::map<std::string, std::string> formulas_;
  long total_failures_ = 0;
};

// Compares two matrices whose columns are indexed by basis tuples with the
// given factor dims; every mismatching column becomes one failure.
void compare_columns(CheckReport& rep, const std::string& axiom,
                     const std::vector<int>& grades,
                     const std::vector<int>& in_dims, const Mat& lhs,
                     const Mat& rhs, const std::string& formula = "");

}  // namespace hopfpi
