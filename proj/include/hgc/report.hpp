#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hgc/scalar.hpp"

namespace hgc {

using Vec = std::vector<Scalar>;

std::string render_vec(const Vec& v);

/// One violated law instance: which check, at which indices, and the two
/// sides that were supposed to be equal.
struct CheckFailure {
  std::string check;    // stable check id, e.g. "graded_algebra.assoc"
  std::string witness;  // witnessing index tuple, human readable
  std::string lhs;
  std::string rhs;
};

/// Accumulates the outcome of a validation run: every law instance that was
/// evaluated, and every violation with its witness.
class ValidationReport {
 public:
  struct Stat {
    std::size_t instances = 0;
    std::size_t failures = 0;
  };

  void count(const std::string& check) { stats_[check].instances++; }

  void fail(const std::string& check, const std::string& witness,
            const std::string& lhs, const std::string& rhs) {
    stats_[check].failures++;
    failures_.push_back({check, witness, lhs, rhs});
  }

  /// Counts one instance and records a failure unless both sides agree.
  void expect_eq(const std::string& check, const std::string& witness,
                 const Vec& lhs, const Vec& rhs) {
    count(check);
    if (lhs != rhs) fail(check, witness, render_vec(lhs), render_vec(rhs));
  }

  void expect_scalar_eq(const std::string& check, const std::string& witness,
                        const Scalar& lhs, const Scalar& rhs) {
    count(check);
    if (lhs != rhs) fail(check, witness, lhs.str(), rhs.str());
  }

  void expect_true(const std::string& check, const std::string& witness,
                   bool ok, const std::string& detail = "") {
    count(check);
    if (!ok) fail(check, witness, detail, "");
  }

  void merge(const ValidationReport& o) {
    for (const auto& [id, st] : o.stats_) {
      stats_[id].instances += st.instances;
      stats_[id].failures += st.failures;
    }
    failures_.insert(failures_.end(), o.failures_.begin(), o.failures_.end());
  }

  bool ok() const { return failures_.empty(); }
  const std::vector<CheckFailure>& failures() const { return failures_; }
  const std::map<std::string, Stat>& stats() const { return stats_; }

  /// Short human summary, at most `max_witnesses` failures spelled out.
  std::string summary(std::size_t max_witnesses = 3) const;

  /// Throws Error(code) rendering the first failures if the report is bad.
  void require_ok(const std::string& code) const;

 private:
  std::map<std::string, Stat> stats_;
  std::vector<CheckFailure> failures_;
};

}  // namespace hgc
