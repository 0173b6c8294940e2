#ifndef AXIAL_EXPINT_HPP
#define AXIAL_EXPINT_HPP

namespace axial {

// Exponential integral E1(x) = int_x^inf exp(-t)/t dt for x > 0.
// Power series below x = 1, modified-Lentz continued fraction above;
// target 1e-14 relative accuracy.
double expint_e1(double x);

}  // namespace axial

#endif
