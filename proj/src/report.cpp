#include "hbm/report.hpp"

namespace hbm {

void Report::section(const std::string& name) { lines_.push_back("== " + name + " =="); }

void Report::line(const std::string& key, const std::string& value) { lines_.push_back(key + ": " + value); }

void Report::check(const CheckResult& result) {
  lines_.push_back("check " + result.name + ": " + (result.passed ? "PASS" : "FAIL") + " (checked " +
                   std::to_string(result.checked) + ")");
  if (!result.passed) {
    ++failures_;
    lines_.push_back("witness: " + result.witness);
  }
}

void Report::check(const std::string& name, bool passed, const std::string& witness) {
  lines_.push_back("check " + name + ": " + (passed ? "PASS" : "FAIL"));
  if (!passed) {
    ++failures_;
    lines_.push_back("witness: " + witness);
  }
}

void Report::append(const Report& other) {
  lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
  failures_ += other.failures_;
}

std::string Report::str() const {
  std::string out;
  for (const auto& l : lines_) {
    out += l;
    out += '\n';
  }
  return out;
}

}  // namespace hbm
