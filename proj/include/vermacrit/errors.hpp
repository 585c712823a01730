#pragma once

#include <stdexcept>
#include <string>

namespace vermacrit {

struct UnknownAlgebra : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WindowExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotARoot : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotLoopElement : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WeightMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotImaginaryWeight : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GenericityUnverified : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateDirection : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonUniqueSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InconsistentCoefficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingGolden : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace vermacrit
