#pragma once

#include "superweyl/checks.hpp"
#include "superweyl/errors.hpp"
#include "superweyl/gamma.hpp"
#include "superweyl/grassmann.hpp"
#include "superweyl/json_io.hpp"
#include "superweyl/linalg.hpp"
#include "superweyl/matsuper.hpp"
#include "superweyl/param_poly.hpp"
#include "superweyl/rational.hpp"
#include "superweyl/realizations/degenerate.hpp"
#include "superweyl/realizations/isomorphism.hpp"
#include "superweyl/realizations/phi.hpp"
#include "superweyl/realizations/rho.hpp"
#include "superweyl/realizations/theta.hpp"
#include "superweyl/realizations/weyl_action.hpp"
#include "superweyl/relation_tables.hpp"
#include "superweyl/report.hpp"
#include "superweyl/sampling.hpp"
#include "superweyl/scalar.hpp"
#include "superweyl/scalar_io.hpp"
#include "superweyl/sl22.hpp"
#include "superweyl/superlie.hpp"
#include "superweyl/superlie_io.hpp"
#include "superweyl/supersymbol.hpp"
#include "superweyl/supersymbol_io.hpp"
#include "superweyl/symbol.hpp"
