#pragma once

#include <stdexcept>
#include <string>

namespace psychoprobe {

// Validation failures map to CLI exit code 1, I/O failures to exit code 2.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define PSYCHOPROBE_DEFINE_ERROR(Name, Base)                                  \
  class Name : public Base {                                                  \
  public:                                                                     \
    using Base::Base;                                                         \
  }

// questionnaire
PSYCHOPROBE_DEFINE_ERROR(MalformedBank, ValidationError);

// collector
PSYCHOPROBE_DEFINE_ERROR(EndpointUnreachable, ValidationError);
PSYCHOPROBE_DEFINE_ERROR(AuthRejected, ValidationError);
PSYCHOPROBE_DEFINE_ERROR(IoFailure, IoError);
PSYCHOPROBE_DEFINE_ERROR(SchemaViolation, ValidationError);

// scoring
PSYCHOPROBE_DEFINE_ERROR(OutOfScale, ValidationError);
PSYCHOPROBE_DEFINE_ERROR(InvalidInput, ValidationError);
PSYCHOPROBE_DEFINE_ERROR(EmptyGroup, ValidationError);

// stats
PSYCHOPROBE_DEFINE_ERROR(DegenerateVariance, ValidationError);
PSYCHOPROBE_DEFINE_ERROR(DegenerateData, ValidationError);
PSYCHOPROBE_DEFINE_ERROR(DegenerateGroups, ValidationError);
PSYCHOPROBE_DEFINE_ERROR(SampleSizeOutOfRange, ValidationError);
PSYCHOPROBE_DEFINE_ERROR(SampleTooSmall, ValidationError);
PSYCHOPROBE_DEFINE_ERROR(RankDeficient, ValidationError);

// mixture
PSYCHOPROBE_DEFINE_ERROR(NonConvergence, ValidationError);
PSYCHOPROBE_DEFINE_ERROR(InsufficientDraws, ValidationError);
PSYCHOPROBE_DEFINE_ERROR(NothingConverged, ValidationError);

// textstats
PSYCHOPROBE_DEFINE_ERROR(EmptyTable, ValidationError);

#undef PSYCHOPROBE_DEFINE_ERROR

} // namespace psychoprobe
