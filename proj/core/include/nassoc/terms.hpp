#pragma once

#include "nassoc/terms/expr.hpp"
#include "nassoc/terms/parse.hpp"
#include "nassoc/terms/permutation.hpp"
#include "nassoc/terms/polarize.hpp"
#include "nassoc/terms/systems.hpp"
#include "nassoc/terms/word.hpp"
