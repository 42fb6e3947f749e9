#pragma once

namespace lcsb {

// Central-moment upper-bound constants: E|L_n - E L_n|^r <= const * n^(r/2).
double upper_C(double r, double K);  // tail integration of the Hoeffding bound
double upper_D(double r, double K);  // same integral taken from zero
double upper_E(double r, double p);  // tensorisation bound, binary model

struct MgfUpper {
    double erf_form;
    double loose_form;
};

// Bounds on E exp(t |V_n|), V_n the centred score over sqrt(n), for K = 1.
MgfUpper upper_mgf(double t);

}  // namespace lcsb
