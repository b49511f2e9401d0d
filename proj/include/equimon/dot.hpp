#ifndef EQUIMON_DOT_HPP
#define EQUIMON_DOT_HPP

#include <string>

#include "equimon/gset.hpp"

namespace equimon {

/// Renders the box poset as a DOT digraph: one node per stabilizer class,
/// labeled with the subgroup order, alpha and [N:H]; edges are the covering
/// relations of the class order, pointing from smaller to larger class.
/// Node order follows class ids, so the output is deterministic.
std::string poset_dot(const BoxDecomposition& box);

}  // namespace equimon

#endif
