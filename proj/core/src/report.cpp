#include "hopf/report.hpp"

#include <sstream>

namespace hopf {

bool Report::all_pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

const CheckResult* Report::find(const std::string& id) const {
  for (const auto& r : results)
    if (r.id == id) return &r;
  return nullptr;
}

void Report::append(const Report& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << r.id << ' ' << algebra << ' ' << (r.pass ? "PASS" : "FAIL");
    if (!r.pass && !r.counterexample.empty()) os << ' ' << r.counterexample;
    os << '\n';
  }
  return os.str();
}

std::string format_vec(std::span<const Scalar> v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + "]";
}

std::string mismatch(std::span<const Scalar> lhs, std::span<const Scalar> rhs) {
  return "lhs=" + format_vec(lhs) + " rhs=" + format_vec(rhs);
}

std::string mismatch(const Scalar& lhs, const Scalar& rhs) {
  return "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
}

}  // namespace hopf
