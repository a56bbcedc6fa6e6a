#pragma once

// Umbrella header. report_json.hpp is left out because it needs json.hpp on the include path.

#include "hopf/checked.hpp"
#include "hopf/equivariant.hpp"
#include "hopf/finite_field.hpp"
#include "hopf/formulas.hpp"
#include "hopf/jordan_types.hpp"
#include "hopf/motive_poly.hpp"
#include "hopf/oracle.hpp"
#include "hopf/parallel.hpp"
#include "hopf/quasi.hpp"
#include "hopf/verify.hpp"
