#pragma once

#include <stdexcept>
#include <string>

namespace loadcast {

/// Base class for all loadcast errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Ingestion / series construction
struct EmptyTrace : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct UngriddedData : Error { using Error::Error; };
struct InvalidSplit : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };
struct InvalidKind : Error { using Error::Error; };

// Diagnostics
struct EmptyCollection : Error { using Error::Error; };
struct DegenerateSeries : Error { using Error::Error; };

// SARIMA
struct InvalidSpacing : Error { using Error::Error; };
struct FitDiverged : Error { using Error::Error; };
struct NoFeasibleModel : Error { using Error::Error; };

// LSTM
struct ShapeError : Error { using Error::Error; };
struct TrainingDiverged : Error { using Error::Error; };
struct ChannelMismatch : Error { using Error::Error; };

// Metrics
struct UndefinedMetric : Error { using Error::Error; };
struct ZeroActual : Error { using Error::Error; };

// Configuration / IO
struct ConfigError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

} // namespace loadcast
