#pragma once

#include "nassoc/operads/consequences.hpp"
#include "nassoc/operads/koszul.hpp"
#include "nassoc/operads/multilinear_space.hpp"
#include "nassoc/operads/normal_form.hpp"
