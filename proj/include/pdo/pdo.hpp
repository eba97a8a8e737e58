#pragma once

#include "action.hpp"
#include "error.hpp"
#include "exactcoef.hpp"
#include "graded.hpp"
#include "invariants.hpp"
#include "lift.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "rankin.hpp"
#include "rat.hpp"
#include "ratfunc.hpp"
#include "rings.hpp"
#include "series.hpp"
#include "verify.hpp"
