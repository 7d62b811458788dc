#pragma once

#include "lpdo/division.hpp"
#include "lpdo/error.hpp"
#include "lpdo/factorization.hpp"
#include "lpdo/invariants.hpp"
#include "lpdo/normal_form.hpp"
#include "lpdo/operator.hpp"
#include "lpdo/parser.hpp"
#include "lpdo/polynomial.hpp"
#include "lpdo/rational_function.hpp"
#include "lpdo/reducibility.hpp"
#include "lpdo/symbol.hpp"
