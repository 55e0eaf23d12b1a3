#include "kwplane/schedule.hpp"

#include <limits>

namespace kw {

void Schedule::validate() const {
    if (radii.empty()) throw InvalidInput("Schedule: radii ladder is empty");
    double prev_r = 0.0;
    for (double r : radii) {
        if (!(r > prev_r)) throw InvalidInput("Schedule: radii must be positive and strictly increasing");
        prev_r = r;
    }
    if (epsilons.empty()) throw InvalidInput("Schedule: epsilon ladder is empty");
    double prev_e = std::numeric_limits<double>::infinity();
    for (double e : epsilons) {
        if (!(e > 0.0) || !(e < prev_e))
            throw InvalidInput("Schedule: epsilons must be positive and strictly decreasing");
        prev_e = e;
    }
    if (!(time_step > 0.0)) throw InvalidInput("Schedule: time_step must be positive");
    if (!(tol_newton > 0.0)) throw InvalidInput("Schedule: tol_newton must be positive");
    if (!(tol_continuation > 0.0)) throw InvalidInput("Schedule: tol_continuation must be positive");
    if (!(sup_cap > 0.0)) throw InvalidInput("Schedule: sup_cap must be positive");
    if (n < 5 || n % 2 == 0) throw InvalidInput("Schedule: grid nodes must be odd and at least 5");
}

} // namespace kw
