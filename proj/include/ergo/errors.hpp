#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ergo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

class NotConstantRowSum : public Error {
public:
    NotConstantRowSum(std::size_t worst_row, double deviation)
        : Error("matrix is not a constant row-sum matrix: row " +
                std::to_string(worst_row) + " deviates from the mean row sum by " +
                std::to_string(deviation)),
          worst_row_(worst_row),
          deviation_(deviation) {}

    std::size_t worst_row() const { return worst_row_; }
    double deviation() const { return deviation_; }

private:
    std::size_t worst_row_;
    double deviation_;
};

class SingularMatrix : public Error {
public:
    SingularMatrix(std::size_t pivot_index, double pivot_magnitude)
        : Error("matrix is singular to working precision: pivot " +
                std::to_string(pivot_index) + " has magnitude " +
                std::to_string(pivot_magnitude)),
          pivot_index_(pivot_index),
          pivot_magnitude_(pivot_magnitude) {}

    std::size_t pivot_index() const { return pivot_index_; }
    double pivot_magnitude() const { return pivot_magnitude_; }

private:
    std::size_t pivot_index_;
    double pivot_magnitude_;
};

// tau_p of the inverse power is zero, so the reciprocal bound is undefined.
struct DegenerateCoefficient : Error {
    using Error::Error;
};

struct TrivialEigenvalueNotZero : Error {
    using Error::Error;
};

struct GraphDisconnected : Error {
    using Error::Error;
};

struct NoEdges : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct DimensionTooLarge : Error {
    using Error::Error;
};

struct NonConvergence : Error {
    using Error::Error;
};

}  // namespace ergo
