#pragma once

#include <stdexcept>
#include <string>

namespace lagrangian {

// Base class for all errors raised by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (matroid, graph, complex or collapse-sequence files).
struct parse_error : error {
  parse_error(std::size_t line_no, const std::string& what)
      : error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  std::size_t line;
};

// A flat family that fails one of the validation axioms.
struct axiom_error : error {
  using error::error;
};

// A collapse pair whose tau is not a free face at application time.
struct freeness_violation : error {
  freeness_violation(std::size_t step_index, const std::string& coface_label)
      : error("collapse step " + std::to_string(step_index) +
              ": tau is not free, offending coface {" + coface_label + "}"),
        step(step_index),
        coface(coface_label) {}
  std::size_t step;
  std::string coface;
};

// A condition the synthesis algorithms guarantee by construction; reaching
// one of these indicates a logic bug, not bad input.
struct internal_error : error {
  using error::error;
};

}  // namespace lagrangian
