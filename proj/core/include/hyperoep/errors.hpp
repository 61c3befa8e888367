#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperoep {

/// Input outside the domain of an operation (point off the model, bad
/// parameter, violated precondition).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Accumulated floating point drift that re-projection could not repair.
class NumericalDegradation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedDimension : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Adaptive integration failed to make progress (step size underflow).
class StiffnessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation at a singular point of an ODE coefficient.
class SingularityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A chart computation left the region where the chart is defined.
class ChartError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Sink for non-fatal diagnostics. Defaults to stderr; tests may swap it.
using WarningSink = std::function<void(std::string_view)>;

void set_warning_sink(WarningSink sink);
void warn(std::string_view message);

}  // namespace hyperoep
