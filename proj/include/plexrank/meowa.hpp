#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "plexrank/errors.hpp"

namespace plexrank {

/// MEOWA weight vector for a given beta. Weights are in [0,1], sum to 1,
/// and are non-increasing for beta > 0, uniform at beta = 0, non-decreasing
/// for beta < 0. The beta = +/-inf limits are available as explicit pure
/// OR/AND vectors.
struct WeightVector {
    double beta = 0.0;
    std::vector<double> weights;

    std::size_t size() const { return weights.size(); }
};

/// w_i proportional to exp(beta * (n - i) / (n - 1)), i = 1..n, computed with
/// the maximum exponent shifted out so large |beta| * n cannot overflow.
/// Throws InvalidArity for n < 2.
WeightVector meowa_weights(double beta, std::size_t n);

/// (1, 0, ..., 0): aggregation picks the maximum input (beta -> +inf limit).
WeightVector pure_or_weights(std::size_t n);

/// (0, ..., 0, 1): aggregation picks the minimum input (beta -> -inf limit).
WeightVector pure_and_weights(std::size_t n);

/// Yager's orness: (1 / (n-1)) * sum (n-i) * w_i, in [0,1].
/// 1 = pure OR (max), 0 = pure AND (min), 0.5 = plain average.
double orness(const WeightVector& w);

/// Shannon entropy -sum w_i ln w_i in nats, with 0 ln 0 = 0.
double entropy(const WeightVector& w);

/// Ordered weighted average: sort values non-increasingly and dot with the
/// weights. Throws ArityMismatch if sizes differ.
double aggregate(std::span<const double> values, const WeightVector& w);

}  // namespace plexrank
