#pragma once
// Compensated (Neumaier) accumulators.  Long sums in this library are taken
// with these so single-threaded results are bit-reproducible and the
// accumulated roundoff stays near one ulp of the true sum.

#include <cmath>
#include <complex>

namespace zetalab {

class NeumaierSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    NeumaierSum& operator+=(double x) {
        add(x);
        return *this;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class ComplexSum {
  public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    ComplexSum& operator+=(std::complex<double> z) {
        add(z);
        return *this;
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

  private:
    NeumaierSum re_, im_;
};

}  // namespace zetalab
