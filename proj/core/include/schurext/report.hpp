#pragma once

#include <string>
#include <vector>

namespace schurext {

// Outcome of a verification routine. Failures are collected, not thrown.
struct CheckReport {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
  void fail(std::string what) { failures.push_back(std::move(what)); }
  void note(std::string what) { notes.push_back(std::move(what)); }
  // Counts one case; records `what` as a failure when `pass` is false.
  bool expect(bool pass, const std::string& what) {
    ++cases;
    if (!pass) fail(what);
    return pass;
  }
  void merge(const CheckReport& o) {
    cases += o.cases;
    for (auto& f : o.failures) failures.push_back(o.name.empty() ? f : o.name + ": " + f);
    for (auto& n : o.notes) notes.push_back(o.name.empty() ? n : o.name + ": " + n);
  }
};

}  // namespace schurext
