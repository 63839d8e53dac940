#ifndef LENGTHSETS_LENGTHSETS_HPP
#define LENGTHSETS_LENGTHSETS_HPP

#include "lengthsets/accp.hpp"
#include "lengthsets/algebra.hpp"
#include "lengthsets/arith.hpp"
#include "lengthsets/coproduct.hpp"
#include "lengthsets/errors.hpp"
#include "lengthsets/io.hpp"
#include "lengthsets/lengths.hpp"
#include "lengthsets/numerical_monoid.hpp"
#include "lengthsets/prime_reciprocal.hpp"
#include "lengthsets/puiseux.hpp"
#include "lengthsets/realize.hpp"
#include "lengthsets/realize_finite.hpp"
#include "lengthsets/stage.hpp"

#endif
