#pragma once

// Embedded copies of data/unitroot_critical_values.csv and
// data/bounds_critical_values.csv. tests/test_series.cpp checks that
// the two stay byte-identical. Regenerate with tools/embed_tables.py.

#include <string_view>

namespace tsardl::tables {

inline constexpr std::string_view kUnitRootCriticalValuesCsv = R"CSV(# tsardl unit-root critical values v2
# adf: MacKinnon (2010) response surfaces, one variable
# dfgls: finite-sample DF-GLS response surfaces (arch package, MacKinnon-style fit)
# za: Zivot-Andrews (1992) Tables 2-4, trim 0.15
# T_range is matched against the number of observations in the test regression;
# each row evaluates its surface at a representative T inside the range.
test,case,level,T_range,value
adf,none,1,20-29,-2.661
adf,none,1,30-39,-2.633
adf,none,1,40-59,-2.612
adf,none,1,60-89,-2.596
adf,none,1,90-124,-2.588
adf,none,1,125-174,-2.581
adf,none,1,175-249,-2.577
adf,none,1,250-399,-2.573
adf,none,1,400-749,-2.570
adf,none,1,750-1499,-2.568
adf,none,1,1500-inf,-2.566
adf,none,5,20-29,-1.955
adf,none,5,30-39,-1.951
adf,none,5,40-59,-1.947
adf,none,5,60-89,-1.945
adf,none,5,90-124,-1.944
adf,none,5,125-174,-1.943
adf,none,5,175-249,-1.942
adf,none,5,250-399,-1.942
adf,none,5,400-749,-1.942
adf,none,5,750-1499,-1.941
adf,none,5,1500-inf,-1.941
adf,none,10,20-29,-1.609
adf,none,10,30-39,-1.611
adf,none,10,40-59,-1.612
adf,none,10,60-89,-1.614
adf,none,10,90-124,-1.614
adf,none,10,125-174,-1.615
adf,none,10,175-249,-1.616
adf,none,10,250-399,-1.616
adf,none,10,400-749,-1.616
adf,none,10,750-1499,-1.617
adf,none,10,1500-inf,-1.617
adf,constant,1,20-29,-3.724
adf,constant,1,30-39,-3.633
adf,constant,1,40-59,-3.568
adf,constant,1,60-89,-3.521
adf,constant,1,90-124,-3.498
adf,constant,1,125-174,-3.475
adf,constant,1,175-249,-3.463
adf,constant,1,250-399,-3.452
adf,constant,1,400-749,-3.443
adf,constant,1,750-1499,-3.437
adf,constant,1,1500-inf,-3.430
adf,constant,5,20-29,-2.986
adf,constant,5,30-39,-2.949
adf,constant,5,40-59,-2.921
adf,constant,5,60-89,-2.901
adf,constant,5,90-124,-2.891
adf,constant,5,125-174,-2.881
adf,constant,5,175-249,-2.876
adf,constant,5,250-399,-2.871
adf,constant,5,400-749,-2.867
adf,constant,5,750-1499,-2.864
adf,constant,5,1500-inf,-2.862
adf,constant,10,20-29,-2.633
adf,constant,10,30-39,-2.613
adf,constant,10,40-59,-2.599
adf,constant,10,60-89,-2.588
adf,constant,10,90-124,-2.582
adf,constant,10,125-174,-2.577
adf,constant,10,175-249,-2.575
adf,constant,10,250-399,-2.572
adf,constant,10,400-749,-2.570
adf,constant,10,750-1499,-2.568
adf,constant,10,1500-inf,-2.567
adf,constant_trend,1,20-29,-4.375
adf,constant_trend,1,30-39,-4.244
adf,constant_trend,1,40-59,-4.152
adf,constant_trend,1,60-89,-4.085
adf,constant_trend,1,90-124,-4.052
adf,constant_trend,1,125-174,-4.020
adf,constant_trend,1,175-249,-4.005
adf,constant_trend,1,250-399,-3.989
adf,constant_trend,1,400-749,-3.977
adf,constant_trend,1,750-1499,-3.968
adf,constant_trend,1,1500-inf,-3.959
adf,constant_trend,5,20-29,-3.603
adf,constant_trend,5,30-39,-3.544
adf,constant_trend,5,40-59,-3.502
adf,constant_trend,5,60-89,-3.471
adf,constant_trend,5,90-124,-3.455
adf,constant_trend,5,125-174,-3.440
adf,constant_trend,5,175-249,-3.433
adf,constant_trend,5,250-399,-3.425
adf,constant_trend,5,400-749,-3.419
adf,constant_trend,5,750-1499,-3.415
adf,constant_trend,5,1500-inf,-3.410
adf,constant_trend,10,20-29,-3.238
adf,constant_trend,10,30-39,-3.205
adf,constant_trend,10,40-59,-3.181
adf,constant_trend,10,60-89,-3.162
adf,constant_trend,10,90-124,-3.153
adf,constant_trend,10,125-174,-3.144
adf,constant_trend,10,175-249,-3.140
adf,constant_trend,10,250-399,-3.136
adf,constant_trend,10,400-749,-3.132
adf,constant_trend,10,750-1499,-3.130
adf,constant_trend,10,1500-inf,-3.127
dfgls,constant,1,20-29,-3.212
dfgls,constant,1,30-39,-3.047
dfgls,constant,1,40-59,-2.920
dfgls,constant,1,60-89,-2.814
dfgls,constant,1,90-124,-2.757
dfgls,constant,1,125-174,-2.697
dfgls,constant,1,175-249,-2.666
dfgls,constant,1,250-399,-2.634
dfgls,constant,1,400-749,-2.608
dfgls,constant,1,750-1499,-2.588
dfgls,constant,1,1500-inf,-2.568
dfgls,constant,5,20-29,-2.541
dfgls,constant,5,30-39,-2.404
dfgls,constant,5,40-59,-2.292
dfgls,constant,5,60-89,-2.192
dfgls,constant,5,90-124,-2.137
dfgls,constant,5,125-174,-2.078
dfgls,constant,5,175-249,-2.046
dfgls,constant,5,250-399,-2.013
dfgls,constant,5,400-749,-1.986
dfgls,constant,5,750-1499,-1.965
dfgls,constant,5,1500-inf,-1.944
dfgls,constant,10,20-29,-2.225
dfgls,constant,10,30-39,-2.095
dfgls,constant,10,40-59,-1.983
dfgls,constant,10,60-89,-1.882
dfgls,constant,10,90-124,-1.825
dfgls,constant,10,125-174,-1.762
dfgls,constant,10,175-249,-1.729
dfgls,constant,10,250-399,-1.694
dfgls,constant,10,400-749,-1.665
dfgls,constant,10,750-1499,-1.643
dfgls,constant,10,1500-inf,-1.620
dfgls,constant_trend,1,20-29,-4.284
dfgls,constant_trend,1,30-39,-4.024
dfgls,constant_trend,1,40-59,-3.837
dfgls,constant_trend,1,60-89,-3.693
dfgls,constant_trend,1,90-124,-3.622
dfgls,constant_trend,1,125-174,-3.551
dfgls,constant_trend,1,175-249,-3.515
dfgls,constant_trend,1,250-399,-3.479
dfgls,constant_trend,1,400-749,-3.450
dfgls,constant_trend,1,750-1499,-3.429
dfgls,constant_trend,1,1500-inf,-3.407
dfgls,constant_trend,5,20-29,-3.550
dfgls,constant_trend,5,30-39,-3.359
dfgls,constant_trend,5,40-59,-3.213
dfgls,constant_trend,5,60-89,-3.096
dfgls,constant_trend,5,90-124,-3.036
dfgls,constant_trend,5,125-174,-2.975
dfgls,constant_trend,5,175-249,-2.943
dfgls,constant_trend,5,250-399,-2.911
dfgls,constant_trend,5,400-749,-2.886
dfgls,constant_trend,5,750-1499,-2.866
dfgls,constant_trend,5,1500-inf,-2.847
dfgls,constant_trend,10,20-29,-3.203
dfgls,constant_trend,10,30-39,-3.038
dfgls,constant_trend,10,40-59,-2.908
dfgls,constant_trend,10,60-89,-2.799
dfgls,constant_trend,10,90-124,-2.742
dfgls,constant_trend,10,125-174,-2.683
dfgls,constant_trend,10,175-249,-2.653
dfgls,constant_trend,10,250-399,-2.622
dfgls,constant_trend,10,400-749,-2.597
dfgls,constant_trend,10,750-1499,-2.578
dfgls,constant_trend,10,1500-inf,-2.559
za,intercept,1,50-inf,-5.340
za,intercept,5,50-inf,-4.800
za,intercept,10,50-inf,-4.580
za,trend,1,50-inf,-4.930
za,trend,5,50-inf,-4.420
za,trend,10,50-inf,-4.110
za,both,1,50-inf,-5.570
za,both,5,50-inf,-5.080
za,both,10,50-inf,-4.820
)CSV";

inline constexpr std::string_view kBoundsCriticalValuesCsv = R"CSV(# tsardl bounds F-test critical values v1
# Pesaran, Shin and Smith (2001) Table CI, asymptotic, cases I-V
case,k,level,I0_bound,I1_bound
I,0,10,3.00,3.00
I,0,5,4.20,4.20
I,0,1,7.17,7.17
I,1,10,2.44,3.28
I,1,5,3.15,4.11
I,1,1,4.81,6.02
I,2,10,2.17,3.19
I,2,5,2.72,3.83
I,2,1,3.88,5.30
I,3,10,2.01,3.10
I,3,5,2.45,3.63
I,3,1,3.42,4.84
I,4,10,1.90,3.01
I,4,5,2.26,3.48
I,4,1,3.07,4.44
I,5,10,1.81,2.93
I,5,5,2.14,3.34
I,5,1,2.82,4.21
I,6,10,1.75,2.87
I,6,5,2.04,3.24
I,6,1,2.66,4.05
I,7,10,1.70,2.83
I,7,5,1.97,3.18
I,7,1,2.54,3.91
I,8,10,1.66,2.79
I,8,5,1.91,3.11
I,8,1,2.45,3.79
I,9,10,1.63,2.75
I,9,5,1.86,3.05
I,9,1,2.34,3.68
I,10,10,1.60,2.72
I,10,5,1.82,2.99
I,10,1,2.26,3.60
II,1,10,3.02,3.51
II,1,5,3.62,4.16
II,1,1,4.94,5.58
II,2,10,2.63,3.35
II,2,5,3.10,3.87
II,2,1,4.13,5.00
II,3,10,2.37,3.20
II,3,5,2.79,3.67
II,3,1,3.65,4.66
II,4,10,2.20,3.09
II,4,5,2.56,3.49
II,4,1,3.29,4.37
II,5,10,2.08,3.00
II,5,5,2.39,3.38
II,5,1,3.06,4.15
II,6,10,1.99,2.94
II,6,5,2.27,3.28
II,6,1,2.88,3.99
II,7,10,1.92,2.89
II,7,5,2.17,3.21
II,7,1,2.73,3.90
II,8,10,1.85,2.85
II,8,5,2.11,3.15
II,8,1,2.62,3.77
II,9,10,1.80,2.80
II,9,5,2.04,3.08
II,9,1,2.50,3.68
II,10,10,1.76,2.77
II,10,5,1.98,3.04
II,10,1,2.41,3.61
III,0,10,6.58,6.58
III,0,5,8.21,8.21
III,0,1,11.79,11.79
III,1,10,4.04,4.78
III,1,5,4.94,5.73
III,1,1,6.84,7.84
III,2,10,3.17,4.14
III,2,5,3.79,4.85
III,2,1,5.15,6.36
III,3,10,2.72,3.77
III,3,5,3.23,4.35
III,3,1,4.29,5.61
III,4,10,2.45,3.52
III,4,5,2.86,4.01
III,4,1,3.74,5.06
III,5,10,2.26,3.35
III,5,5,2.62,3.79
III,5,1,3.41,4.68
III,6,10,2.12,3.23
III,6,5,2.45,3.61
III,6,1,3.15,4.43
III,7,10,2.03,3.13
III,7,5,2.32,3.50
III,7,1,2.96,4.26
III,8,10,1.95,3.06
III,8,5,2.22,3.39
III,8,1,2.79,4.10
III,9,10,1.88,2.99
III,9,5,2.14,3.30
III,9,1,2.65,3.97
III,10,10,1.83,2.94
III,10,5,2.06,3.24
III,10,1,2.54,3.86
IV,1,10,4.05,4.49
IV,1,5,4.68,5.15
IV,1,1,6.10,6.73
IV,2,10,3.38,4.02
IV,2,5,3.88,4.61
IV,2,1,4.99,5.85
IV,3,10,2.97,3.74
IV,3,5,3.38,4.23
IV,3,1,4.30,5.23
IV,4,10,2.68,3.53
IV,4,5,3.05,3.97
IV,4,1,3.81,4.92
IV,5,10,2.49,3.38
IV,5,5,2.81,3.76
IV,5,1,3.50,4.63
IV,6,10,2.33,3.25
IV,6,5,2.63,3.62
IV,6,1,3.27,4.39
IV,7,10,2.22,3.17
IV,7,5,2.50,3.50
IV,7,1,3.07,4.23
IV,8,10,2.13,3.09
IV,8,5,2.38,3.41
IV,8,1,2.93,4.06
IV,9,10,2.05,3.02
IV,9,5,2.30,3.33
IV,9,1,2.79,3.93
IV,10,10,1.98,2.97
IV,10,5,2.24,3.28
IV,10,1,2.68,3.84
V,0,10,9.81,9.81
V,0,5,11.64,11.64
V,0,1,15.73,15.73
V,1,10,5.59,6.26
V,1,5,6.56,7.30
V,1,1,8.74,9.63
V,2,10,4.19,5.06
V,2,5,4.87,5.85
V,2,1,6.34,7.52
V,3,10,3.47,4.45
V,3,5,4.01,5.07
V,3,1,5.17,6.36
V,4,10,3.03,4.06
V,4,5,3.47,4.57
V,4,1,4.40,5.72
V,5,10,2.75,3.79
V,5,5,3.12,4.25
V,5,1,3.93,5.23
V,6,10,2.53,3.59
V,6,5,2.87,4.00
V,6,1,3.60,4.90
V,7,10,2.38,3.45
V,7,5,2.69,3.83
V,7,1,3.34,4.63
V,8,10,2.26,3.34
V,8,5,2.55,3.68
V,8,1,3.15,4.43
V,9,10,2.16,3.24
V,9,5,2.43,3.56
V,9,1,2.97,4.24
V,10,10,2.07,3.16
V,10,5,2.33,3.46
V,10,1,2.84,4.10
)CSV";

}  // namespace tsardl::tables
