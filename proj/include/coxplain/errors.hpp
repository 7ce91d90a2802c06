#pragma once

#include <stdexcept>
#include <string>

namespace coxplain {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dataset contains no observed events (all censored).
struct NoEventsError : Error {
    using Error::Error;
};

// A step function violates the cumulative-hazard invariants
// (negative value or decreasing sequence).
struct InvalidChfError : Error {
    using Error::Error;
};

// No (i, j) pair is usable for concordance evaluation.
struct NoComparablePairsError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

// Newton iterations exceeded the limit or a coefficient ran away.
struct DivergedError : Error {
    using Error::Error;
};

struct DatasetTooSmallError : Error {
    using Error::Error;
};

// Simplex pivots degraded below the numeric floor.
struct NumericalFailureError : Error {
    using Error::Error;
};

// Some Q_k < R_k handed to the LP assembler.
struct InvalidQrError : Error {
    using Error::Error;
};

struct PointOutsideBallError : Error {
    using Error::Error;
};

// Two step functions live on different time grids.
struct GridMismatchError : Error {
    using Error::Error;
};

struct EmptyInputError : Error {
    using Error::Error;
};

struct SchemaMismatchError : Error {
    using Error::Error;
};

struct EmptyAfterFilteringError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct MalformedReportError : Error {
    using Error::Error;
};

}  // namespace coxplain
