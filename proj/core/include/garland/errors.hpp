#pragma once

#include <stdexcept>
#include <string>

namespace garland {

// Malformed textual input (words, graphs, surface files).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An operation received the identity word where a nontrivial one is required.
struct TrivialInput : std::invalid_argument {
  explicit TrivialInput(const std::string& what) : std::invalid_argument(what) {}
};

// The two loops share a primitive root (up to conjugacy and inversion), so
// crossing enumeration and the bracket are undefined for them.
struct CommonRoot : std::invalid_argument {
  explicit CommonRoot(const std::string& what) : std::invalid_argument(what) {}
};

struct IndexOutOfRange : std::out_of_range {
  explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

// chord_diagram_class input whose circle quotient is not a forest.
struct NotTreeLike : std::invalid_argument {
  explicit NotTreeLike(const std::string& what) : std::invalid_argument(what) {}
};

// alpha_merge applied to a term whose graph is not the two-circle one-chord graph.
struct WrongGraph : std::invalid_argument {
  explicit WrongGraph(const std::string& what) : std::invalid_argument(what) {}
};

// An internal cross-check failed (e.g. the two intersection counts disagree).
struct VerificationFailure : std::logic_error {
  explicit VerificationFailure(const std::string& what) : std::logic_error(what) {}
};

}  // namespace garland
