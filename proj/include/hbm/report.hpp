#pragma once

#include "hbm/equivariant.hpp"

#include <string>
#include <vector>

namespace hbm {

/// Line-oriented text report: "== section ==" headers followed by
/// "key: value" lines. Check lines read "check <name>: PASS|FAIL (checked N)"
/// and a failure is followed by a "witness: ..." line.
class Report {
 public:
  void section(const std::string& name);
  void line(const std::string& key, const std::string& value);
  void check(const CheckResult& result);
  void check(const std::string& name, bool passed, const std::string& witness = {});
  void append(const Report& other);

  bool all_passed() const { return failures_ == 0; }
  std::size_t failures() const { return failures_; }
  std::string str() const;

 private:
  std::vector<std::string> lines_;
  std::size_t failures_ = 0;
};

}  // namespace hbm
