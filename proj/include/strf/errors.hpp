#pragma once

#include <stdexcept>
#include <string>

namespace strf {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define STRF_DEFINE_ERROR(Name)                                  \
  struct Name : Error {                                          \
    explicit Name(const std::string& msg = #Name) : Error(msg) {} \
  }

// scalespace
STRF_DEFINE_ERROR(NonPositiveVariance);
STRF_DEFINE_ERROR(BadRatio);
STRF_DEFINE_ERROR(DimensionMismatch);
STRF_DEFINE_ERROR(UninitializedState);
STRF_DEFINE_ERROR(EmptyGrid);
STRF_DEFINE_ERROR(NonPositiveScale);
STRF_DEFINE_ERROR(InsufficientHistory);

// rfields
STRF_DEFINE_ERROR(UnknownFieldSet);
STRF_DEFINE_ERROR(MissingChannels);

// descriptor
STRF_DEFINE_ERROR(InsufficientSamples);
STRF_DEFINE_ERROR(DegenerateCovariance);
STRF_DEFINE_ERROR(NormalizedHistogramWrite);
STRF_DEFINE_ERROR(EmptyHistogram);
STRF_DEFINE_ERROR(IncompatibleHistograms);
STRF_DEFINE_ERROR(UnsupportedHistogramSize);

// classify
STRF_DEFINE_ERROR(EmptyTrainingSet);
STRF_DEFINE_ERROR(SingleClassTraining);
STRF_DEFINE_ERROR(NonConvergence);
STRF_DEFINE_ERROR(SchemeMismatch);

// ingest
STRF_DEFINE_ERROR(UnsupportedFormat);
STRF_DEFINE_ERROR(CorruptHeader);
STRF_DEFINE_ERROR(DimensionChangeMidStream);
STRF_DEFINE_ERROR(DuplicatePath);
STRF_DEFINE_ERROR(MissingFile);
STRF_DEFINE_ERROR(EmptyClass);
STRF_DEFINE_ERROR(BadParams);
STRF_DEFINE_ERROR(NonIntegerTemporalFactor);

// io
STRF_DEFINE_ERROR(IoError);

#undef STRF_DEFINE_ERROR

}  // namespace strf
