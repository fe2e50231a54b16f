#pragma once

#include "nassoc/moduli/certificate_io.hpp"
#include "nassoc/moduli/closed_set.hpp"
#include "nassoc/moduli/invariants.hpp"
#include "nassoc/moduli/transform.hpp"
