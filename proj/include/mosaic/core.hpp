#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mosaic {

using Vec = std::vector<double>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad dimensions, invalid option values, violated call preconditions.
struct ConfigError : Error {
    using Error::Error;
};

/// Data that violates a documented assumption (rank condition, parse or
/// integrity failures, degenerate feature covariance).
struct DataError : Error {
    using Error::Error;
};

/// Training produced a non-finite loss; caller may retry with new
/// hyperparameters.
struct DivergenceError : Error {
    using Error::Error;
};

/// API misuse (e.g. asking for components before the unmixing is fitted).
struct UsageError : Error {
    using Error::Error;
};

/// Dense row-major matrix of doubles.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> v;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), v(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return v[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return v[i * cols + j]; }
    double* row(std::size_t i) { return v.data() + i * cols; }
    const double* row(std::size_t i) const { return v.data() + i * cols; }
    bool empty() const { return rows == 0 || cols == 0; }

    Vec column(std::size_t j) const;
    bool all_finite() const;
};

/// A bivariate sample: two columns of equal length.
struct PairData {
    Vec x1;
    Vec x2;

    std::size_t size() const { return x1.size(); }
    Mat as_matrix() const;
    static PairData from_matrix(const Mat& m);
    PairData swapped() const { return PairData{x2, x1}; }
};

/// A bivariate sample with optional ground-truth direction and benchmark
/// weight. cause == 0 means unknown.
struct CausalPair {
    int id = -1;
    PairData data;
    int cause = 0;
    double weight = 1.0;

    /// Data with the cause variable in column one. Requires cause in {1,2}.
    PairData aligned() const;
};

/// Per-pair column transform: center and scale each column to unit variance.
/// Fitted once per pair and reused for any sample points of that pair.
struct Standardizer {
    std::array<double, 2> mean{0.0, 0.0};
    std::array<double, 2> scale{1.0, 1.0};

    static Standardizer fit(const PairData& p);
    PairData apply(const PairData& p) const;
};

double mean(const Vec& v);
double variance(const Vec& v);  // population (1/n)
bool all_finite(const Vec& v);

/// Center and scale a vector to zero mean, unit variance. Constant input
/// maps to all zeros.
Vec standardized(const Vec& v);

/// Deterministic sub-stream seed derivation (splitmix64 chain), so that
/// parallel jobs keyed by indices reproduce regardless of scheduling.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

}  // namespace mosaic
