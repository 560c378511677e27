#pragma once

#include <string>

#include "surfq/shape.hpp"

namespace surfq {

std::string print_node(const ExprNode& n);
bool depends_on_rho(const ExprNode& n);

}  // namespace surfq
