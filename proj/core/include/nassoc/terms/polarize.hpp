#pragma once

#include <vector>

#include "nassoc/terms/expr.hpp"

namespace nassoc {

// Full polarization of a total-degree homogeneous identity: one multilinear
// identity per multihomogeneous component (already multilinear input is
// returned unchanged).  NotHomogeneous otherwise.
std::vector<Identity> multilinearize(const Identity& id);

// Multilinearizes every identity of the system.
IdentitySystem multilinearize(const IdentitySystem& sys);

}  // namespace nassoc
