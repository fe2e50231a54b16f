#pragma once

#include "nassoc/algebras/algebra.hpp"
#include "nassoc/algebras/algebra_io.hpp"
#include "nassoc/algebras/constructions.hpp"
#include "nassoc/algebras/identity_check.hpp"
#include "nassoc/algebras/linear.hpp"
#include "nassoc/algebras/structure.hpp"
#include "nassoc/algebras/wedderburn.hpp"
