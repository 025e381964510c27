#ifndef E8INDEX_E8INDEX_HPP
#define E8INDEX_E8INDEX_HPP

#include "bundle_expr.hpp"
#include "e8_lattice.hpp"
#include "fixture.hpp"
#include "gaussian_rational.hpp"
#include "index_series.hpp"
#include "laurent_polynomial.hpp"
#include "q_products.hpp"
#include "rational_function.hpp"
#include "report.hpp"
#include "theta.hpp"
#include "truncated_series.hpp"

#endif
