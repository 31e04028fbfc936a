#pragma once

#include <cmath>

namespace vsz {

// Neumaier's variant of Kahan summation.
class NeumaierSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    NeumaierSum& operator+=(double x) noexcept {
        add(x);
        return *this;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// x^alpha for x >= 1 via exp(alpha * ln x). alpha = 0 and alpha = 1 are exact.
inline double power(double x, double alpha) noexcept {
    if (alpha == 0.0 || x == 1.0) return 1.0;
    if (alpha == 1.0) return x;
    return std::exp(alpha * std::log(x));
}

}  // namespace vsz
