#ifndef FRFTLAB_TYPES_HPP
#define FRFTLAB_TYPES_HPP

#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace frftlab {

using cplx = std::complex<double>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated numeric precondition (aliasing risk, singular order, bad exponent...).
struct NumericError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

/// Uniform sample locations start + i*step, i = 0..count-1.
struct UniformGrid {
    double start = 0.0;
    double step = 1.0;
    std::size_t count = 1;

    UniformGrid() = default;
    UniformGrid(double start_, double step_, std::size_t count_)
        : start(start_), step(step_), count(count_) {
        if (!(step > 0.0)) throw NumericError("grid step must be > 0");
        if (count < 1) throw NumericError("grid count must be >= 1");
    }

    double point(std::size_t i) const { return start + static_cast<double>(i) * step; }
    double back() const { return point(count - 1); }
    // Largest |t| over the grid; the T of the oscillation bound.
    double half_width() const { return std::max(std::abs(start), std::abs(back())); }

    bool same_as(const UniformGrid& o, double rel = 1e-9) const {
        const double scale = std::max({std::abs(start), std::abs(step), 1.0});
        return count == o.count && std::abs(start - o.start) <= rel * scale &&
               std::abs(step - o.step) <= rel * step;
    }
};

/// Symmetric grid [-half_width, half_width] with an odd point count (0 is a node).
UniformGrid symmetric_grid(double half_width, double step);
/// Symmetric grid with nodes at +-(k+1/2)*step; no node at 0.
UniformGrid symmetric_grid_offset(double half_width, double step);

/// Complex samples over a uniform grid. Implicitly zero outside the grid.
struct Signal {
    UniformGrid grid;
    std::vector<cplx> samples;

    Signal() = default;
    Signal(UniformGrid g, std::vector<cplx> s) : grid(g), samples(std::move(s)) {
        if (samples.size() != grid.count)
            throw NumericError("sample count does not match grid count");
    }

    std::size_t size() const { return samples.size(); }
};

/// Lebesgue exponent in [1, inf] with its dual p' = p/(p-1).
struct LpExponent {
    double p = 2.0;

    LpExponent() = default;
    explicit LpExponent(double p_) : p(p_) {
        if (!(p >= 1.0)) throw NumericError("invalid exponent: p must be >= 1");
    }
    static LpExponent infinity() {
        LpExponent e;
        e.p = std::numeric_limits<double>::infinity();
        return e;
    }
    bool is_infinite() const { return std::isinf(p); }
    LpExponent dual() const {
        if (is_infinite()) return LpExponent(1.0);
        if (p == 1.0) return infinity();
        return LpExponent(p / (p - 1.0));
    }
};

// Value plus an optional non-fatal diagnostic.
template <class T>
struct Warned {
    T value{};
    std::string warning;
    bool has_warning() const { return !warning.empty(); }
};

}  // namespace frftlab

#endif
