#pragma once

#include <stdexcept>
#include <string>

namespace kjdt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction-time poset defects: cycles, disconnected input, empty
// element set, name collisions.
struct InvalidPoset : Error {
  using Error::Error;
};

struct UnknownElement : Error {
  using Error::Error;
};

// nu/lambda not ideals, lambda not contained in nu, or a restriction whose
// numeric support fails to be a skew shape.
struct InvalidShape : Error {
  using Error::Error;
};

// Labeling violates strict order preservation or the dotted-tableau
// invariants (dot antichain, below/above separation).
struct InvalidTableau : Error {
  using Error::Error;
};

// A minimally-labeled tableau required as a rectification target is not a
// unique rectification target; structure constants are undefined there.
struct NotUrt : Error {
  using Error::Error;
};

}  // namespace kjdt
