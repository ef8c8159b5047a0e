#pragma once

// Reference values computed independently with mpmath at 40-digit precision.

#include <complex>

namespace oracle {

using Complex = std::complex<double>;

// log Gamma on the principal branch
inline const Complex lg_1p1i{-0.65092319930185634, -0.30164032046753320};
inline const Complex lg_half_m3i{-3.7934504504362232, -0.30981927108643917};
inline const Complex lg_20_5i{38.705835948079529, 14.906326673515808};
// Gamma itself, left half-plane
inline const Complex gamma_m43_07i{0.0028201869965864659, -0.018968352230624592};
// Gamma(1.01) / Gamma(0.99)
inline const double gamma_ratio_001 = 0.98852127439051743;

// sum_k (z^2/4)^k / (k! (1 - nu)_k) and the (1 + nu)_k companion
// at nu = 0.3 + 0.2i, z = 1.2 - 0.4i
inline const Complex series_minus{1.5538399333649766, -0.24939580063510420};
inline const Complex series_plus{1.2132107355500691, -0.24450524228570584};

// Macdonald function, principal branch
inline const Complex k_03_02i_at_12_m04i{0.26216485705582621, 0.17205113852207289};
inline const Complex k_25_at_07{8.4863415928013836, 0.0};
inline const Complex k_10i_at_3{-6.3759939798738607e-8, 0.0};

// residual E and dE/dw at nu = 3 + 1i, w = 0.2 - 1.0i
inline const Complex residual_31{1.1418280304128979, 0.13628552248246217};
inline const Complex residual_31_deriv{0.28830924915382719, 0.35677962938673799};

// Airy function values
inline const double ai_m1 = 0.53556088329235212;
inline const double ai_m5 = 0.35076100902411432;
inline const double ai_25 = 0.015725923380470490;
inline const double aip_m1 = -0.010160567116645209;
inline const double aip_25 = -0.026250881035903230;

inline const double airy_zeros[10] = {
    -2.3381074104597670, -4.0879494441309706, -5.5205598280955511,
    -6.7867080900717590, -7.9441335871208531, -9.0226508533409804,
    -10.040174341558086, -11.008524303733263, -11.936015563236263,
    -12.828776752865757,
};

// coefficients of the nu^{-2j/3} corrections in the transition-region
// angle for the first zero
inline const Complex alpha1[4] = {
    {0.65084390763647674, 1.1272947158230433},
    {-0.0025034990773272828, 0.0043361875986326593},
    {0.11435388919717607, 0.0},
    {0.027301554083210874, 0.047287678797710773},
};

} // namespace oracle
