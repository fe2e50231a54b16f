#pragma once

#include "nassoc/error.hpp"
#include "nassoc/exact/matrix.hpp"
#include "nassoc/exact/poly.hpp"
#include "nassoc/exact/ratfun.hpp"
#include "nassoc/exact/rational.hpp"
#include "nassoc/exact/series.hpp"
#include "nassoc/exact/sparse.hpp"
