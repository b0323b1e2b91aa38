#ifndef KBESSEL_KBESSEL_HPP
#define KBESSEL_KBESSEL_HPP

#include "bigfloat.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "core.hpp"
#include "quadrature.hpp"
#include "gamma.hpp"
#include "airy.hpp"
#include "saddle.hpp"
#include "oracle.hpp"
#include "asymptotics.hpp"
#include "zeta.hpp"
#include "eisenstein.hpp"

#endif
