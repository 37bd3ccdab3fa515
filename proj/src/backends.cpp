#include "qblowup/backends.hpp"

namespace qb {

std::vector<ParameterPoint> default_points(Grid grid, int window) {
    // Root values with nearly disjoint prime support so the pole-set check
    // cannot trip by accident.
    return {
        ParameterPoint(make_rational(2, 3), make_rational(6, 5), make_rational(5, 7), grid, window),
        ParameterPoint(make_rational(5, 8), make_rational(7, 5), make_rational(3, 11), grid, window),
        ParameterPoint(make_rational(4, 7), make_rational(9, 8), make_rational(5, 13), grid, window),
    };
}

Rational alternate_u_root(std::size_t point_index) {
    switch (point_index % 3) {
        case 0: return make_rational(4, 11);
        case 1: return make_rational(7, 13);
        default: return make_rational(2, 7);
    }
}

}  // namespace qb
