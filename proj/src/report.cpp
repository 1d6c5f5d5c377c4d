#include "hopfpi/report.hpp"

#include <algorithm>
#include <sstream>

namespace hopfpi {

void CheckReport::note_checked(const std::string& axiom,
                               const std::string& formula) {
  if (std::find(checked_.begin(), checked_.end(), axiom) == checked_.end()) {
    checked_.push_back(axiom);
  }
  if (!formula.empty()) formulas_[axiom] = formula;
}

void CheckReport::add_failure(CheckFailure f) {
  note_checked(f.axiom);
  ++counts_[f.axiom];
  ++total_failures_;
  int& kept = kept_[f.axiom];
  if (kept < kMaxKeptPerAxiom) {
    ++kept;
    failures_.push_back(std::move(f));
  }
}

void CheckReport::merge(const CheckReport& o, const std::string& prefix) {
  for (const auto& axiom : o.checked_) note_checked(prefix + axiom);
  for (const auto& [axiom, formula] : o.formulas_) {
    formulas_[prefix + axiom] = formula;
  }
  for (const auto& [axiom, count] : o.counts_) {
    note_checked(prefix + axiom);
    counts_[prefix + axiom] += count;
    total_failures_ += count;
  }
  for (const auto& f : o.failures_) {
    int& kept = kept_[prefix + f.axiom];
    if (kept < kMaxKeptPerAxiom) {
      ++kept;
      failures_.push_back(f);
      failures_.back().axiom = prefix + f.axiom;
    }
  }
}

long CheckReport::count_for(const std::string& axiom) const {
  auto it = counts_.find(axiom);
  return it == counts_.end() ? 0 : it->second;
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  for (const auto& axiom : checked_) {
    long c = count_for(axiom);
    os << "  " << axiom << ": " << (c == 0 ? "ok" : "FAIL (" + std::to_string(c) + " basis tuples)");
    auto fit = formulas_.find(axiom);
    if (fit != formulas_.end()) os << "   [" << fit->second << "]";
    os << "\n";
  }
  for (const auto& f : failures_) {
    os << "    counterexample " << f.axiom << " grades(";
    for (size_t i = 0; i < f.grades.size(); ++i) os << (i ? "," : "") << f.grades[i];
    os << ") basis(";
    for (size_t i = 0; i < f.basis.size(); ++i) os << (i ? "," : "") << f.basis[i];
    os << ") lhs=[";
    for (size_t i = 0; i < f.lhs.size(); ++i) os << (i ? "," : "") << f.lhs[i];
    os << "] rhs=[";
    for (size_t i = 0; i < f.rhs.size(); ++i) os << (i ? "," : "") << f.rhs[i];
    os << "]\n";
  }
  return os.str();
}

void compare_columns(CheckReport& rep, const std::string& axiom,
                     const std::vector<int>& grades,
                     const std::vector<int>& in_dims, const Mat& lhs,
                     const Mat& rhs, const std::string& formula) {
  rep.note_checked(axiom, formula);
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw InputError("axiom '" + axiom + "' compares mismatched shapes");
  }
  for (int c = 0; c < lhs.cols(); ++c) {
    bool equal = true;
    for (int r = 0; r < lhs.rows() && equal; ++r) {
      equal = lhs.at(r, c) == rhs.at(r, c);
    }
    if (equal) continue;
    CheckFailure f;
    f.axiom = axiom;
    f.grades = grades;
    f.basis = unflatten_index(in_dims, c);
    for (int r = 0; r < lhs.rows(); ++r) {
      f.lhs.push_back(lhs.at(r, c).to_string());
      f.rhs.push_back(rhs.at(r, c).to_string());
    }
    rep.add_failure(std::move(f));
  }
}

}  // namespace hopfpi
