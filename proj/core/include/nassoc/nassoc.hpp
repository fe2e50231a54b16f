#pragma once

#include "nassoc/algebras.hpp"
#include "nassoc/exact.hpp"
#include "nassoc/moduli.hpp"
#include "nassoc/operads.hpp"
#include "nassoc/terms.hpp"
