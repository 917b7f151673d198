#pragma once

#include <exception>
#include <string>
#include <utility>

#include "weylshape/parse.hpp"
#include "weylshape/props/suites.hpp"

namespace weylshape::props {

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void count() { ++result_.cases; }

  /// Records a failure when !ok; `what` is only evaluated then.
  template <class F>
  void expect(bool ok, F&& what) {
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = what();
  }

  template <class F>
  void flag(F&& what) {
    if (result_.flagged++ == 0) result_.first_flag = what();
  }

  /// Runs one case; an exception counts as a failure.
  template <class F>
  void run(F&& body) {
    count();
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, [&] { return std::string("exception: ") + e.what(); });
    }
  }

  SuiteResult done() { return std::move(result_); }

 private:
  SuiteResult result_;
};

inline std::string show(const WeylElement& p) { return format(p); }
inline std::string show(const LaurentElement& p) { return format(p); }

}  // namespace weylshape::props
