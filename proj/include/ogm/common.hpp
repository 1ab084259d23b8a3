#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace ogm {

// Input could not be tokenized or parsed; pos is a byte offset into the input.
struct parse_error : std::runtime_error {
  std::size_t pos;
  parse_error(const std::string& msg, std::size_t p)
      : std::runtime_error(msg + " (at offset " + std::to_string(p) + ")"), pos(p) {}
};

// Division by zero, inverting a non-unit, singular matrix, and friends.
struct arithmetic_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Valid request, but outside what this build supports (e.g. extension fields).
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition violated by the caller (mismatched backends, bad dimensions).
struct precondition_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Valuation in Z together with +infinity (the valuation of 0).
class Valuation {
 public:
  static Valuation infinite() { return Valuation(true, 0); }
  static Valuation of(long n) { return Valuation(false, n); }

  bool is_infinite() const { return inf_; }
  long value() const {
    if (inf_) throw arithmetic_error("valuation: +infinity has no finite value");
    return v_;
  }
  // true iff this >= n (infinity dominates everything)
  bool at_least(long n) const { return inf_ || v_ >= n; }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }

 private:
  Valuation(bool inf, long v) : inf_(inf), v_(v) {}
  bool inf_;
  long v_;
};

}  // namespace ogm
