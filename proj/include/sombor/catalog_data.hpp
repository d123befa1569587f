#pragma once

// Extremal family catalog, one template per row.
//
// Columns: label c | degree distribution n4 n3 n2_offset n1 (n2 = n - n2_offset) |
// m11 m12 m13 m14 m23 m24 m33 m34 m44 | k (m22 = n - k) | min_n (smallest realizable n) |
// printed SO constant, printed SO_red constant (SO = 2*sqrt(2)*n + const, SO_red = sqrt(2)*n + const).
// Rows are transcribed verbatim, including known defects; repairs are applied in families.hpp.

namespace sombor {

inline constexpr const char* kFamilyCatalogText = R"(# sombor-family-catalog v1
Phi 0 1 0 5 4 0 4 0 0 0 4 0 0 0 9 9 1.376971607 3.921188579
Omega 0 0 3 8 5 0 5 0 0 5 0 2 0 0 13 13 0.923825017 3.452417826
A1 0 0 0 2 2 0 2 0 0 0 0 0 0 0 3 3 -4.013145419 -2.242640687
A2 0 0 1 4 3 0 1 2 0 1 0 0 0 0 5 5 -1.975961050 0.165000165
A3 0 0 1 4 3 0 2 1 0 2 0 0 0 0 6 6 -2.125046582 -0.013145419
A4 0 0 1 4 3 0 3 0 0 3 0 0 0 0 7 7 -2.274132114 -0.191291004
A5 0 0 2 6 4 0 0 4 0 2 0 0 0 0 7 7 0.061223318 2.572641018
A6 0 0 2 6 4 0 1 3 0 3 0 0 0 0 8 8 -0.087862213 2.394495433
A7 0 0 2 6 4 0 2 2 0 4 0 0 0 0 9 9 -0.236947745 2.216349848
A8 0 0 2 6 4 0 1 3 0 1 0 1 0 0 7 7 -0.227896952 2.165000165
A9 0 0 2 6 4 0 3 1 0 5 0 0 0 0 10 10 -0.386033277 2.038204263
A10 0 0 2 6 4 0 2 2 0 2 0 1 0 0 8 8 -0.376982484 1.986854580
A11 0 0 2 6 4 0 4 0 0 6 0 0 0 0 11 11 -0.535118809 1.860058678
A12 0 0 2 6 4 0 3 1 0 3 0 1 0 0 9 9 -0.526068016 1.808708995
A13 0 0 2 6 4 0 4 0 0 4 0 1 0 0 10 10 -0.675153548 1.630563411
alpha1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 3 0 0
alpha2 1 0 1 2 1 0 0 1 0 2 0 0 0 0 3 4 1.888 2.229
alpha3 1 0 1 2 1 0 1 0 0 3 0 0 0 0 4 5 1.739 2.051
alpha4 1 1 0 3 2 0 0 0 2 0 2 0 0 0 4 5 5.876 6.667
alpha5 1 1 0 3 2 0 1 0 1 0 3 0 0 0 5 6 5.633 6.415
alpha6 1 1 0 3 2 0 2 0 0 0 4 0 0 0 6 7 5.390 6.163
alpha7 1 0 2 4 2 0 0 2 0 2 0 1 0 0 5 5 3.636 4.229
alpha8 1 0 2 4 2 0 1 1 0 3 0 1 0 0 6 6 3.487 4.051
alpha9 1 0 2 4 2 0 2 0 0 4 0 1 0 0 7 7 3.337 3.873
alpha10 1 0 2 4 2 0 0 2 0 4 0 0 0 0 6 6 3.776 4.458
alpha11 1 0 2 4 2 0 1 1 0 5 0 0 0 0 7 7 3.627 4.280
alpha12 1 0 2 4 2 0 2 0 0 6 0 0 0 0 8 8 3.478 4.102
beta1 2 1 0 1 0 0 0 0 0 0 4 0 0 0 3 5 9.403 8.406
beta2 2 0 2 2 0 0 0 0 0 4 0 1 0 0 4 4 7.351 6.115
beta3 2 0 2 2 0 0 0 0 0 6 0 0 0 0 5 5 7.491 6.345
beta4 2 1 1 3 1 0 0 0 1 2 2 0 1 0 5 5 11.136 10.331
beta5 2 1 1 3 1 0 1 0 0 2 3 0 1 0 6 6 10.893 10.079
beta6 2 1 1 3 1 0 0 0 1 3 3 0 0 0 6 6 11.385 10.709
beta7 2 1 1 3 1 0 1 0 0 3 4 0 0 0 7 7 11.142 10.457
beta8 2 0 3 4 1 0 0 1 0 2 0 3 0 0 5 5 8.959 7.886
beta9 2 0 3 4 1 0 1 0 0 3 0 3 0 0 6 6 8.810 7.708
beta10 2 0 3 4 1 0 0 1 0 4 0 2 0 0 6 6 9.099 8.115
beta11 2 0 3 4 1 0 1 0 0 5 0 2 0 0 7 7 8.950 7.937
beta12 2 0 3 4 1 0 0 1 0 6 0 1 0 0 7 7 9.239 8.345
beta13 2 0 3 4 1 0 1 0 0 7 0 1 0 0 8 8 9.090 8.167
beta14 2 0 3 4 1 0 0 1 0 8 0 0 0 0 8 8 9.379 8.574
beta15 2 0 3 4 1 0 1 0 0 9 0 0 0 0 9 9 9.230 8.396
gamma1 3 2 0 2 0 0 0 0 0 0 8 0 0 0 6 6 18.806 16.812
gamma2 3 2 0 2 0 0 0 0 0 0 6 0 0 1 5 5 18.347 16.145
gamma3 3 1 2 3 0 0 0 0 0 2 2 1 2 0 5 5 16.255 13.765
gamma4 3 1 2 3 0 0 0 0 0 3 3 1 1 0 6 6 16.505 14.143
gamma5 3 1 2 3 0 0 0 0 0 4 4 1 0 0 7 7 16.754 14.522
gamma6 3 1 2 3 0 0 0 0 0 4 2 0 2 0 6 6 16.395 13.994
gamma7 3 1 2 3 0 0 0 0 0 5 3 0 1 0 7 7 16.645 14.373
gamma8 3 1 2 3 0 0 0 0 0 6 4 0 0 0 8 8 16.894 14.751
gamma9 3 0 4 4 0 0 0 0 0 2 0 5 0 0 5 5 14.282 11.543
gamma10 3 0 4 4 0 0 0 0 0 4 0 4 0 0 6 6 14.422 11.772
gamma11 3 0 4 4 0 0 0 0 0 6 0 3 0 0 7 7 14.562 12.002
gamma12 3 0 4 4 0 0 0 0 0 8 0 2 0 0 8 8 14.702 12.231
gamma13 3 0 4 4 0 0 0 0 0 10 0 1 0 0 9 9 14.842 12.461
gamma14 3 0 4 4 0 0 0 0 0 12 0 0 0 0 10 10 14.982 12.690
gamma15 3 2 1 4 1 0 0 0 1 1 3 0 2 1 6 6 19.831 17.691
gamma16 3 2 1 4 1 0 1 0 0 1 4 0 2 1 7 7 19.588 17.439
gamma17 3 2 1 4 1 0 0 0 1 2 4 0 1 1 7 7 20.080 18.069
gamma18 3 2 1 4 1 0 1 0 0 2 5 0 1 1 8 8 19.837 17.818
gamma19 3 2 1 4 1 0 0 0 1 3 5 0 0 1 8 8 20.329 18.448
gamma20 3 2 1 4 1 0 1 0 0 3 6 0 0 1 9 9 20.086 18.196
gamma21 3 2 1 4 1 0 0 0 1 1 5 0 2 0 7 7 20.290 18.359
gamma22 3 2 1 4 1 0 1 0 0 1 6 0 2 0 8 8 20.047 18.107
gamma23 3 2 1 4 1 0 0 0 1 2 6 0 1 0 8 8 20.539 18.737
gamma24 3 2 1 4 1 0 1 0 0 2 7 0 1 0 9 9 20.296 18.485
gamma25 3 2 1 4 1 0 0 0 1 3 7 0 0 0 9 9 20.788 16.116
gamma26 3 2 1 4 1 0 1 0 0 3 8 0 0 0 10 10 20.545 18.864
gamma27 3 1 3 5 1 0 0 0 1 2 0 2 3 0 6 6 17.848 15.460
gamma28 3 1 3 5 1 0 0 0 1 4 0 1 3 0 7 7 17.988 15.689
gamma29 3 1 3 5 1 0 0 0 1 6 0 0 3 0 8 8 18.128 15.919
gamma30 3 1 3 5 1 0 0 0 1 1 1 3 2 0 6 6 17.958 15.609
gamma31 3 1 3 5 1 0 0 0 1 3 1 2 2 0 7 7 18.098 15.838
gamma32 3 1 3 5 1 0 0 0 1 5 1 1 2 0 8 8 18.238 16.068
gamma33 3 1 3 5 1 0 0 0 1 7 1 0 2 0 9 9 18.378 16.297
gamma34 3 1 3 5 1 0 0 0 1 2 2 3 1 0 7 7 18.207 15.988
gamma35 3 1 3 5 1 0 0 0 1 4 2 2 1 0 8 8 18.347 16.217
gamma36 3 1 3 5 1 0 0 0 1 6 2 1 1 0 9 9 18.487 16.447
gamma37 3 1 3 5 1 0 0 0 1 8 2 0 1 0 10 10 18.627 16.676
gamma38 3 1 3 5 1 0 0 0 1 3 3 3 0 0 8 8 18.456 16.366
gamma39 3 1 3 5 1 0 0 0 1 5 3 2 0 0 9 9 18.596 16.596
gamma40 3 1 3 5 1 0 0 0 1 7 3 1 0 0 10 10 18.736 16.825
gamma41 3 1 3 5 1 0 0 0 1 9 3 0 0 0 11 11 18.876 17.055
gamma42 3 1 3 5 1 0 1 0 0 0 1 3 3 0 6 6 17.465 14.978
gamma43 3 1 3 5 1 0 1 0 0 2 1 2 3 0 7 7 17.605 15.208
gamma44 3 1 3 5 1 0 1 0 0 4 1 1 3 0 8 8 17.745 15.437
gamma45 3 1 3 5 1 0 1 0 0 6 1 0 3 0 9 9 17.885 15.667
gamma46 3 1 3 5 1 0 1 0 0 1 2 3 2 0 7 7 17.714 15.357
gamma47 3 1 3 5 1 0 1 0 0 3 2 2 2 0 8 8 17.854 15.587
gamma48 3 1 3 5 1 0 1 0 0 5 2 1 2 0 9 9 17.994 15.816
gamma49 3 1 3 5 1 0 1 0 0 7 2 0 2 0 10 10 18.134 16.045
gamma50 3 1 3 5 1 0 1 0 0 2 3 3 1 0 8 8 17.964 15.736
gamma51 3 1 3 5 1 0 1 0 0 4 3 2 1 1 9 9 18.104 15.965
gamma52 3 1 3 5 1 0 1 0 0 6 3 1 1 0 10 10 18.244 16.195
gamma53 3 1 3 5 1 0 1 0 0 8 3 0 1 0 11 11 18.384 16.424
gamma54 3 1 3 5 1 0 1 0 0 3 4 3 0 0 9 9 18.213 16.114
gamma55 3 1 3 5 1 0 1 0 0 5 4 2 0 0 10 10 18.353 16.344
gamma56 3 1 3 5 1 0 1 0 0 7 4 1 0 0 11 11 18.493 16.573
gamma57 3 1 3 5 1 0 1 0 0 9 4 0 0 0 12 12 18.633 16.803
gamma58 3 0 5 6 1 0 0 1 0 2 0 6 0 0 7 7 16.030 13.543
gamma59 3 0 5 6 1 0 0 1 0 4 0 5 0 0 8 8 16.170 13.772
gamma60 3 0 5 6 1 0 0 1 0 6 0 4 0 0 9 9 16.310 14.002
gamma61 3 0 5 6 1 0 0 1 0 8 0 3 0 0 10 10 16.450 14.231
gamma62 3 0 5 6 1 0 0 1 0 10 0 2 0 0 11 11 16.590 14.461
gamma63 3 0 5 6 1 0 0 1 0 12 0 1 0 0 12 12 16.730 14.690
gamma64 3 0 5 6 1 0 0 1 0 14 0 0 0 0 13 13 16.870 14.920
gamma65 3 0 5 6 1 0 1 0 0 1 0 7 0 0 7 7 15.741 13.135
gamma66 3 0 5 6 1 0 1 0 0 3 0 6 0 0 8 8 15.881 13.365
gamma67 3 0 5 6 1 0 1 0 0 5 0 5 0 0 9 9 16.021 13.594
gamma68 3 0 5 6 1 0 1 0 0 7 0 4 0 0 10 10 16.161 13.824
gamma69 3 0 5 6 1 0 1 0 0 9 0 3 0 0 11 11 16.301 14.053
gamma70 3 0 5 6 1 0 1 0 0 11 0 2 0 0 12 12 16.441 14.283
gamma71 3 0 5 6 1 0 1 0 0 13 0 1 0 0 13 13 16.581 14.512
gamma72 3 0 5 6 1 0 1 0 0 15 0 0 0 0 14 14 16.721 14.742
)";

}  // namespace sombor
