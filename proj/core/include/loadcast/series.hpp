#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace loadcast {

/**
 * A uniformly spaced univariate CPU-usage trace.
 *
 * Values are percentages in [0, 100]. The grid spacing is carried in
 * minutes; ingestion guarantees it is identical between every pair of
 * consecutive points. Instances are immutable by convention once built.
 */
struct TimeSeries {
    std::string id;
    double spacing_minutes = 1.0;
    std::vector<double> values;
    std::optional<double> origin_timestamp;  // epoch seconds of the first point

    std::size_t size() const { return values.size(); }
};

/// Throws unless the series satisfies the TimeSeries invariants.
void validate(const TimeSeries& series);

/**
 * Sliding-window supervised pairs: a length-w input slice followed
 * immediately by its length-h target slice, stride 1 over the source.
 */
struct WindowPair {
    std::vector<double> input;
    std::vector<double> target;
};

struct WindowSet {
    std::size_t input_width = 6;
    std::size_t horizon = 3;
    std::vector<WindowPair> pairs;
    std::string source_id;
};

/// Train/test partitioning: the final fraction is held out, and the first
/// short_term_points of the held-out segment form the short-term test.
struct SplitSpec {
    double test_fraction = 0.2;
    std::size_t short_term_points = 3;
};

struct SplitResult {
    TimeSeries train;
    TimeSeries long_test;
    TimeSeries short_test;
};

enum class SyntheticKind { seasonal, onoff, bursty, noisy, constant };

SyntheticKind parse_kind(std::string_view name);
std::string_view kind_name(SyntheticKind kind);

/**
 * Reads a trace from CSV (header `t,value`). Column t is an integer index
 * (interpreted as minutes) or an epoch-seconds timestamp; spacing is
 * inferred from the first gap and must be uniform throughout.
 */
TimeSeries load_csv(const std::filesystem::path& path);

/// Writes a trace in the same `t,value` format load_csv reads.
void write_csv(const TimeSeries& series, const std::filesystem::path& path);

/**
 * Mean-downsampling: consecutive blocks of `bin` points are averaged;
 * a trailing partial block is dropped. Spacing grows by the bin factor.
 */
TimeSeries resample_mean(const TimeSeries& series, std::size_t bin);

/// Splits into train / long test / short test per the spec above.
/// Concatenating train and long_test reproduces the input exactly.
SplitResult split(const TimeSeries& series, const SplitSpec& spec);

/// All stride-1 (w, h) windows of the series; requires N >= w + h.
WindowSet sliding_windows(const TimeSeries& series, std::size_t w, std::size_t h);

/**
 * Deterministic synthetic trace generator. Kinds mirror the workload
 * classes seen in real cluster traces: daily-seasonal sinusoids, on/off
 * square waves, spiky low-baseline traces, white noise, and constants.
 * Output is a pure function of (kind, length, period, seed); values are
 * clipped to [0, 100].
 */
TimeSeries generate_synthetic(SyntheticKind kind, std::size_t length,
                              std::size_t period, std::uint64_t seed);

} // namespace loadcast
