#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace nhosc {

/// Raised when the two eigenvalues of a 2x2 block coalesce and eigenvectors
/// are unavailable. The (coalesced) eigenvalues are still carried.
class DefectiveMatrix : public std::runtime_error {
public:
    DefectiveMatrix(std::array<std::complex<double>, 2> values, double discriminant)
        : std::runtime_error("matrix is defective (coalesced eigenvalues)"),
          values_(values), discriminant_(discriminant) {}

    const std::array<std::complex<double>, 2>& eigenvalues() const noexcept { return values_; }
    double discriminant_magnitude() const noexcept { return discriminant_; }

private:
    std::array<std::complex<double>, 2> values_;
    double discriminant_;
};

/// The requested quantity is singular at an exceptional point.
class ExceptionalPoint : public std::runtime_error {
public:
    explicit ExceptionalPoint(const std::string& what) : std::runtime_error(what) {}
};

class NoSignChange : public std::invalid_argument {
public:
    explicit NoSignChange(const std::string& what) : std::invalid_argument(what) {}
};

class ConvergenceFailure : public std::runtime_error {
public:
    explicit ConvergenceFailure(const std::string& what) : std::runtime_error(what) {}
};

class StencilCrossesSingularity : public std::runtime_error {
public:
    explicit StencilCrossesSingularity(const std::string& what) : std::runtime_error(what) {}
};

/// I/O failure while emitting data; the message includes the destination.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nhosc
