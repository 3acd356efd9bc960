#pragma once

#include <stdexcept>
#include <string>

#include "conscheck/model.hpp"
#include "conscheck/pacsim.hpp"

namespace conscheck {

/// Error raised by the text-format parsers. what() carries the offending
/// line number ("... at line N"); line() is 0 for file-level errors.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& message);
    int line() const { return line_; }

  private:
    int line_ = 0;
};

/// Parses the line-oriented instance format:
///
///   CONSCHECK 1
///   PROBLEM <name>
///   N <n>
///   [K <k>]            required exactly for problems carrying k
///   [D <d>]            required exactly for degree-bounded problems
///   T <t>
///   S <label> <m>      t times, each followed by m edge lines "u v"
///
/// Strict: LF endings, single-space separation, 0 <= u < v < n, no
/// duplicate edges, degree bounds enforced. Violations raise ParseError.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& instance);

/// Verdict text: "NO-SOLUTION", "SOLUTION VSET v...", "SOLUTION PSET u-v ...",
/// or "SOLUTION COVER k" followed by k lines "C v...".
Verdict parse_verdict(const std::string& text);
std::string serialize_verdict(const Verdict& verdict);

/// Scenario format: like an instance, but samples are unlabeled support
/// entries with probabilities, and the hidden target concept is explicit:
///
///   CONSCHECK-SCENARIO 1
///   PROBLEM <name>
///   N <n>
///   [K <k>] [D <d>]
///   CONCEPT VSET v... | CONCEPT PSET u-v ... | CONCEPT COVER k (+ k C lines)
///   T <t>
///   S <m>              t times
///   PROB <p>           probability, printed with %.17g
///   <m edge lines>
Scenario parse_scenario(const std::string& text);
std::string serialize_scenario(const Scenario& scenario);

}  // namespace conscheck
