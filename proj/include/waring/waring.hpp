#ifndef WARING_WARING_HPP
#define WARING_WARING_HPP

#include "rational.hpp"
#include "errors.hpp"
#include "poly.hpp"
#include "matrix.hpp"
#include "substitute.hpp"
#include "parse.hpp"
#include "exactla.hpp"
#include "oracle.hpp"
#include "interp.hpp"
#include "slices.hpp"
#include "randcheck.hpp"
#include "decide.hpp"
#include "minvars.hpp"
#include "reconstruct.hpp"
#include "io.hpp"

#endif
