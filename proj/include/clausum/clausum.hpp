#pragma once

// Umbrella header: exact closed forms and certified arbitrary-precision
// numerics for rational-argument digamma values and the unit-argument
// Clausen 3F2[1,1,c; 2,c+1; 1] family.

#include "clausum/clausen.hpp"
#include "clausum/closed_form.hpp"
#include "clausum/digamma.hpp"
#include "clausum/errors.hpp"
#include "clausum/expr.hpp"
#include "clausum/hp.hpp"
#include "clausum/rational.hpp"
#include "clausum/report.hpp"
#include "clausum/series_accel.hpp"
#include "clausum/theorems.hpp"
#include "clausum/version.hpp"
