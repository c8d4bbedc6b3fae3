#include "plexrank/meowa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace plexrank {

namespace {

void check_arity(std::size_t n) {
    if (n < 2) {
        throw InvalidArity("MEOWA weights need n >= 2, got n = " + std::to_string(n));
    }
}

}  // namespace

WeightVector meowa_weights(double beta, std::size_t n) {
    check_arity(n);
    WeightVector w;
    w.beta = beta;
    w.weights.resize(n);
    if (beta == 0.0) {
        std::fill(w.weights.begin(), w.weights.end(), 1.0 / static_cast<double>(n));
        return w;
    }
    // exponent for position i (1-based) is beta * (n-i)/(n-1); shift by the
    // maximum so the largest term is exp(0) = 1
    const double denom = static_cast<double>(n - 1);
    const double max_exponent = std::max(beta, 0.0);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double exponent = beta * static_cast<double>(n - 1 - i) / denom;
        w.weights[i] = std::exp(exponent - max_exponent);
        sum += w.weights[i];
    }
    for (double& v : w.weights) v /= sum;
    return w;
}

WeightVector pure_or_weights(std::size_t n) {
    check_arity(n);
    WeightVector w;
    w.beta = std::numeric_limits<double>::infinity();
    w.weights.assign(n, 0.0);
    w.weights.front() = 1.0;
    return w;
}

WeightVector pure_and_weights(std::size_t n) {
    check_arity(n);
    WeightVector w;
    w.beta = -std::numeric_limits<double>::infinity();
    w.weights.assign(n, 0.0);
    w.weights.back() = 1.0;
    return w;
}

double orness(const WeightVector& w) {
    const std::size_t n = w.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += static_cast<double>(n - 1 - i) * w.weights[i];
    }
    return acc / static_cast<double>(n - 1);
}

double entropy(const WeightVector& w) {
    double acc = 0.0;
    for (double v : w.weights) {
        if (v > 0.0) acc -= v * std::log(v);
    }
    return acc;
}

double aggregate(std::span<const double> values, const WeightVector& w) {
    if (values.size() != w.size()) {
        throw ArityMismatch("aggregate: " + std::to_string(values.size()) +
                            " values vs " + std::to_string(w.size()) + " weights");
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    double acc = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) acc += w.weights[i] * sorted[i];
    return acc;
}

}  // namespace plexrank
