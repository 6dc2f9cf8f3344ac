#include "hgc/report.hpp"

#include <sstream>

namespace hgc {

std::string render_vec(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].str();
  }
  os << ")";
  return os.str();
}

std::string ValidationReport::summary(std::size_t max_witnesses) const {
  std::ostringstream os;
  std::size_t total = 0;
  for (const auto& [id, st] : stats_) total += st.instances;
  os << (ok() ? "ok" : "FAIL") << ": " << stats_.size() << " checks, "
     << total << " instances, " << failures_.size() << " failures";
  std::size_t shown = 0;
  for (const auto& f : failures_) {
    if (shown++ == max_witnesses) {
      os << "\n  ... (" << failures_.size() - max_witnesses << " more)";
      break;
    }
    os << "\n  [" << f.check << "] at " << f.witness;
    if (!f.lhs.empty() || !f.rhs.empty())
      os << ": lhs=" << f.lhs << " rhs=" << f.rhs;
  }
  return os.str();
}

void ValidationReport::require_ok(const std::string& code) const {
  if (!ok()) throw Error(code, summary());
}

}  // namespace hgc
