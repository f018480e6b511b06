#pragma once

#include "ho/growth.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ho {

struct GrowthFunction::Node {
    Kind kind = Kind::power;
    double p = 1.0;
    double a = 0.0;

    // table and complementary kinds
    std::vector<Knot> knots;
    std::vector<double> log_t;
    std::vector<double> log_y;
    std::vector<double> argmax;  // complementary: maximizing t per knot
    bool extrapolate = false;

    std::vector<GrowthFunction> operands;
    std::optional<double> lower_type;
    std::optional<double> upper_type;
    Interval support{0.0, 0.0};
    std::vector<std::string> warnings;
};

namespace detail {

/// Log-log linear interpolation on a node's table; honours the extrapolation flag.
double table_eval(const GrowthFunction::Node& node, double t);
double table_inverse(const GrowthFunction::Node& node, double y);

/// Fills log_t/log_y from knots after validation. Throws DomainError on bad knots.
void prepare_table(GrowthFunction::Node& node);

}  // namespace detail

}  // namespace ho
