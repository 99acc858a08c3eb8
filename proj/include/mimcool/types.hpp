#pragma once

#include <complex>

#include <Eigen/Dense>

namespace mim {

using Complex = std::complex<double>;
using Mat6 = Eigen::Matrix<Complex, 6, 6>;
using Vec6 = Eigen::Matrix<Complex, 6, 1>;

inline constexpr Complex kI{0.0, 1.0};

// Fixed mode ordering of the 6-component operator vector
// c = (a1, a1^dag, b, b^dag, a2, a2^dag).
namespace mode {
inline constexpr int a1 = 0;
inline constexpr int a1d = 1;
inline constexpr int b = 2;
inline constexpr int bd = 3;
inline constexpr int a2 = 4;
inline constexpr int a2d = 5;

// Index of the adjoint partner: 0<->1, 2<->3, 4<->5.
inline constexpr int conj_index(int i) { return i ^ 1; }
}  // namespace mode

}  // namespace mim
