#pragma once

#include <array>

namespace pkenum::golden {

// Reference values used by the `verify` command and the regression suite.
// Counts are exact; rates carry 5 significant digits and are checked to
// within rate_tolerance absolute.

inline constexpr double rate_tolerance = 5e-4;

inline constexpr int t000_n_min = 8;
inline constexpr int t000_n_max = 24;

/// <3,4,3>-structure counts for n = 8..24.
inline constexpr std::array<long long, 17> t000_sigma3 = {
    1, 2, 4, 8, 15, 28, 52, 96, 176, 316, 557, 965, 1660, 2860, 4974, 8754,
    15562};

/// <3,4,4>-structure counts for n = 8..24.
inline constexpr std::array<long long, 17> t000_sigma4 = {
    1, 1, 1, 2, 4, 8, 14, 23, 36, 56, 88, 141, 231, 382, 633, 1038, 1679};

/// Growth rates of <k,4,sigma>-structures; rows sigma = 3..9, cols k = 3..9.
inline constexpr double table1_sigma_min = 3;
inline constexpr double table1_k_min = 3;
inline constexpr std::array<std::array<double, 7>, 7> table1 = {{
    {2.0348, 2.2644, 2.4432, 2.5932, 2.7243, 2.8414, 2.9480},
    {1.7898, 1.9370, 2.0488, 2.1407, 2.2198, 2.2896, 2.3523},
    {1.6465, 1.7532, 1.8330, 1.8979, 1.9532, 2.0016, 2.0449},
    {1.5515, 1.6345, 1.6960, 1.7457, 1.7877, 1.8243, 1.8569},
    {1.4834, 1.5510, 1.6008, 1.6408, 1.6745, 1.7038, 1.7297},
    {1.4319, 1.4888, 1.5305, 1.5639, 1.5919, 1.6162, 1.6376},
    {1.3915, 1.4405, 1.4763, 1.5049, 1.5288, 1.5494, 1.5677},
}};

/// Growth rates of <k,2,1>-structures for k = 2..10.
inline constexpr int tab1b_k_min = 2;
inline constexpr std::array<double, 9> tab1b = {
    2.6180, 4.7913, 6.8541, 8.8875, 10.9083, 12.9226, 14.9330, 16.9410,
    18.9472};

/// Growth rates of <k,4,1>-structures for k = 4..9.
inline constexpr int tab2_k_min = 4;
inline constexpr std::array<double, 6> tab2 = {6.5290,  8.6483,  10.7176,
                                               12.7635, 14.7963, 16.8210};

/// Growth rates of <k,2,sigma>-structures; rows sigma = 2..5, cols k = 2..10.
inline constexpr int tab3_sigma_min = 2;
inline constexpr int tab3_k_min = 2;
inline constexpr std::array<std::array<double, 9>, 4> tab3 = {{
    {1.9680, 2.5881, 3.0382, 3.4138, 3.7438, 4.0420, 4.3162, 4.5715, 4.8115},
    {1.7160, 2.0477, 2.2704, 2.4466, 2.5955, 2.7259, 2.8427, 2.9490, 3.0469},
    {1.5782, 1.7984, 1.9410, 2.0511, 2.1423, 2.2209, 2.2904, 2.3529, 2.4100},
    {1.4899, 1.6528, 1.7561, 1.8347, 1.8991, 1.9540, 2.0022, 2.0454, 2.0845},
}};

}  // namespace pkenum::golden
