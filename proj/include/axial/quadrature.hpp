#ifndef AXIAL_QUADRATURE_HPP
#define AXIAL_QUADRATURE_HPP

#include <functional>
#include <stdexcept>

namespace axial {

struct QuadratureResult {
    double value;
    double error;  // achieved absolute error estimate
};

// Thrown when the adaptive scheme cannot meet the requested tolerance.
class ToleranceError : public std::runtime_error {
  public:
    ToleranceError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}
    double achieved() const { return achieved_; }

  private:
    double achieved_;
};

// Adaptive Simpson integration of f over [a, b] with absolute tolerance.
// Throws ToleranceError (carrying the achieved estimate) if the recursion
// depth limit is hit before the tolerance is met.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, double abs_tol, int max_depth = 60);

}  // namespace axial

#endif
