#pragma once

#include <stdexcept>
#include <string>

namespace sboc {

/// Base class for all library errors so callers can catch everything at once.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A coordinate lies outside its box beyond the clamping tolerance.
class OutOfBounds : public Error {
public:
    using Error::Error;
};

/// An operation that needs at least one sample was given an empty dataset.
class EmptyDataset : public Error {
public:
    using Error::Error;
};

/// A training routine was given fewer points than its model requires.
class TooFewPoints : public Error {
public:
    using Error::Error;
};

/// The interpolation system stayed numerically singular after the ridge retry.
class SingularSystem : public Error {
public:
    using Error::Error;
};

/// A correlation matrix could not be factorized even at the largest nugget.
class IllConditioned : public Error {
public:
    using Error::Error;
};

/// Cluster dispersion drop is too small to normalize the elbow test.
class DegenerateSpread : public Error {
public:
    using Error::Error;
};

/// Requested sample dimension exceeds the embedded direction-number table.
class DimensionUnsupported : public Error {
public:
    using Error::Error;
};

/// The objective returned a non-finite value; the run is aborted.
class ObjectiveFailure : public Error {
public:
    using Error::Error;
};

/// Surrogate training failed and no recovery is possible.
class SurrogateFailure : public Error {
public:
    using Error::Error;
};

/// A reported best value lies below the known optimum beyond round-off.
class BelowOptimum : public Error {
public:
    using Error::Error;
};

}  // namespace sboc
