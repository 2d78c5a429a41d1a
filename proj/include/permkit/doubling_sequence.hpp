#pragma once

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "permkit/errors.hpp"

namespace permkit {

// A "doubling sequence": strictly increasing integers with first term 2 and
// each term at most twice its predecessor. Built-in instances:
//
//   powers_of_two      2, 4, 8, 16, ...
//   fibonacci_tail     2, 3, 5, 8, 13, ...   (Fibonacci numbers from 2 on)
//   lucas_variant      2, 3, 4, 7, 11, 18, ...  (Lucas numbers 2, then 3 on)
//   triangular_variant 2, 3, 6, 10, 15, ...  (2, then triangular numbers)
//
// The Lucas instance uses the standard initial values L0 = 2, L1 = 1 and
// takes L0 followed by L2, L3, ...; that is the unique reading for which the
// first term is 2 and the doubling bound holds.
enum class SeqKind { powers_of_two, fibonacci_tail, lucas_variant, triangular_variant, custom };

struct PrefixReport {
  bool ok = true;
  std::size_t index = 0;  // one-based position of the first offending term
  std::string message;
};

// Reports the first position violating: first term 2, strict increase, or
// next term at most double the current one.
inline PrefixReport validate_prefix(const std::vector<std::int64_t>& terms) {
  if (!terms.empty() && terms[0] != 2)
    return {false, 1, "first term must be 2, got " + std::to_string(terms[0])};
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i] <= terms[i - 1])
      return {false, i + 1,
              "term " + std::to_string(terms[i]) + " does not increase past " +
                  std::to_string(terms[i - 1])};
    if (terms[i] > 2 * terms[i - 1])
      return {false, i + 1,
              "term " + std::to_string(terms[i]) + " exceeds twice " +
                  std::to_string(terms[i - 1])};
  }
  return {};
}

class DoublingSequence {
 public:
  static DoublingSequence powers_of_two() { return DoublingSequence(SeqKind::powers_of_two); }
  static DoublingSequence fibonacci_tail() { return DoublingSequence(SeqKind::fibonacci_tail); }
  static DoublingSequence lucas_variant() { return DoublingSequence(SeqKind::lucas_variant); }
  static DoublingSequence triangular_variant() {
    return DoublingSequence(SeqKind::triangular_variant);
  }

  // A custom sequence is given as an explicit finite prefix; requests past
  // its last term are refused rather than extrapolated.
  static DoublingSequence custom(std::vector<std::int64_t> prefix) {
    if (prefix.empty()) fail(errc::invalid_sequence, "custom sequence prefix is empty");
    PrefixReport r = validate_prefix(prefix);
    if (!r.ok)
      fail(errc::invalid_sequence, "custom sequence invalid at term " +
                                       std::to_string(r.index) + ": " + r.message);
    DoublingSequence s(SeqKind::custom);
    s.custom_ = std::move(prefix);
    return s;
  }

  // Accepts pow2 | fib | lucas | tri | custom:<comma-separated terms>.
  static DoublingSequence parse(const std::string& spec) {
    if (spec == "pow2") return powers_of_two();
    if (spec == "fib") return fibonacci_tail();
    if (spec == "lucas") return lucas_variant();
    if (spec == "tri") return triangular_variant();
    const std::string prefix = "custom:";
    if (spec.rfind(prefix, 0) == 0) {
      std::vector<std::int64_t> terms;
      std::stringstream ss(spec.substr(prefix.size()));
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          terms.push_back(std::stoll(item));
        } catch (const std::exception&) {
          fail(errc::parse_error, "bad custom sequence term '" + item + "'");
        }
      }
      return custom(std::move(terms));
    }
    fail(errc::parse_error, "unknown sequence '" + spec + "'");
  }

  SeqKind kind() const { return kind_; }

  std::string name() const {
    switch (kind_) {
      case SeqKind::powers_of_two: return "pow2";
      case SeqKind::fibonacci_tail: return "fib";
      case SeqKind::lucas_variant: return "lucas";
      case SeqKind::triangular_variant: return "tri";
      case SeqKind::custom: return "custom";
    }
    return "?";
  }

  // All terms <= bound, increasing. bound must be >= 2, so the result is
  // never empty. Bounds are capped well below the int64 range so the
  // doubling step cannot overflow.
  std::vector<std::int64_t> terms_up_to(std::int64_t bound) const {
    if (bound < 2) fail(errc::bound_too_small, "bound must be >= 2");
    if (bound > (std::int64_t{1} << 62)) fail(errc::cap_exceeded, "bound exceeds 2^62");
    std::vector<std::int64_t> out;
    switch (kind_) {
      case SeqKind::powers_of_two:
        for (std::int64_t t = 2; t <= bound; t *= 2) out.push_back(t);
        break;
      case SeqKind::fibonacci_tail: {
        std::int64_t a = 2, b = 3;
        while (a <= bound) {
          out.push_back(a);
          std::int64_t next = a + b;
          a = b;
          b = next;
        }
        break;
      }
      case SeqKind::lucas_variant: {
        out.push_back(2);
        std::int64_t a = 1, b = 3;  // L1, L2
        while (b <= bound) {
          out.push_back(b);
          std::int64_t next = a + b;
          a = b;
          b = next;
        }
        break;
      }
      case SeqKind::triangular_variant: {
        out.push_back(2);
        std::int64_t k = 2, t = 3;  // t = k(k+1)/2
        while (t <= bound) {
          out.push_back(t);
          ++k;
          t += k;
        }
        break;
      }
      case SeqKind::custom: {
        if (custom_.back() < bound)
          fail(errc::invalid_sequence,
               "custom prefix ends at " + std::to_string(custom_.back()) +
                   ", cannot enumerate terms up to " + std::to_string(bound));
        for (std::int64_t t : custom_) {
          if (t > bound) break;
          out.push_back(t);
        }
        break;
      }
    }
    return out;
  }

 private:
  explicit DoublingSequence(SeqKind kind) : kind_(kind) {}

  SeqKind kind_;
  std::vector<std::int64_t> custom_;
};

}  // namespace permkit
