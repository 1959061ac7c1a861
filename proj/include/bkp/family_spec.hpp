#pragma once

#include <string>

#include "bkp/poset.hpp"

namespace bkp {

// Builds a poset from a family spec string:
//   chain:5  antichain:3  ferrers:3,2  shifted:4,3,2  zigzag:8
//   N:1,2,1  M:3,4  minO:2
// and compositions  osum(a,b,...)  dsum(a,b,...)  dual(a).
// Parse errors throw ParamError with the offending position.
Poset parse_family_spec(const std::string& spec);

}  // namespace bkp
