#ifndef UAVRELAY_ALLOCATION_HPP
#define UAVRELAY_ALLOCATION_HPP

namespace uavrelay {

/// Energy allocation factors (fractions of the total power budget) for
/// user S_a, user S_b and the relay. Feasible when each lies in [0,1]
/// and their sum does not exceed 1.
struct AllocationFactors {
    double alpha_a = 0.0;
    double alpha_b = 0.0;
    double alpha_r = 0.0;

    double sum() const { return alpha_a + alpha_b + alpha_r; }

    bool feasible(double tol = 0.0) const {
        return alpha_a >= -tol && alpha_a <= 1.0 + tol && alpha_b >= -tol &&
               alpha_b <= 1.0 + tol && alpha_r >= -tol && alpha_r <= 1.0 + tol &&
               sum() <= 1.0 + tol;
    }
};

inline AllocationFactors equal_split() { return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}; }

}  // namespace uavrelay

#endif
