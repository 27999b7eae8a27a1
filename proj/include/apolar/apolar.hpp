#ifndef APOLAR_APOLAR_HPP
#define APOLAR_APOLAR_HPP

#include "apolar/field.hpp"
#include "apolar/monomial.hpp"
#include "apolar/poly.hpp"
#include "apolar/parse.hpp"
#include "apolar/linalg.hpp"
#include "apolar/subspace.hpp"
#include "apolar/univariate.hpp"
#include "apolar/apolarity.hpp"
#include "apolar/hilbert.hpp"
#include "apolar/random.hpp"
#include "apolar/pencil.hpp"
#include "apolar/constructions.hpp"

#endif  // APOLAR_APOLAR_HPP
