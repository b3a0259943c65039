#pragma once

// Umbrella header: exact computation with dual Radford Hopf algebras, their
// Drinfeld doubles, module categories, and the associated Nichols algebras.

#include "radford/builders.hpp"
#include "radford/classify.hpp"
#include "radford/cyclotomic.hpp"
#include "radford/dmodule.hpp"
#include "radford/drinfeld.hpp"
#include "radford/errors.hpp"
#include "radford/hopf.hpp"
#include "radford/json_io.hpp"
#include "radford/matrix.hpp"
#include "radford/nichols.hpp"
#include "radford/qnum.hpp"
#include "radford/transport.hpp"
