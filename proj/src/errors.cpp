#include "attokit/errors.hpp"

#include <sstream>

namespace attokit {

namespace {

std::string above_threshold_message(double field, double atomic_field) {
    std::ostringstream os;
    os << "field " << field << " au exceeds the atomic field strength " << atomic_field
       << " au; the barrier discriminant is imaginary";
    return os.str();
}

}  // namespace

AboveThresholdError::AboveThresholdError(double field, double atomic_field, double imaginary_delta)
    : DomainError(above_threshold_message(field, atomic_field)),
      field_(field),
      atomic_field_(atomic_field),
      imaginary_delta_(imaginary_delta) {}

InfiniteDelayError::InfiniteDelayError()
    : DomainError("zero field strength: the barrier is infinitely wide and the delay diverges") {}

}  // namespace attokit
