#pragma once

// Umbrella header for the slarc diagram-algebra library.

#include "slarc/algebra.hpp"
#include "slarc/aplus.hpp"
#include "slarc/cache.hpp"
#include "slarc/combinat.hpp"
#include "slarc/complex.hpp"
#include "slarc/diagram.hpp"
#include "slarc/functors.hpp"
#include "slarc/grothendieck.hpp"
#include "slarc/homalg.hpp"
#include "slarc/json_io.hpp"
#include "slarc/linalg.hpp"
#include "slarc/module.hpp"
#include "slarc/resolution.hpp"
#include "slarc/scalar.hpp"
#include "slarc/verify.hpp"
