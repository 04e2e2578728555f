#pragma once

#include "exactalg.hpp"
#include "mod2rings.hpp"
#include "rewriting.hpp"
#include "dihedral.hpp"
#include "intrings.hpp"
#include "bockstein.hpp"
#include "strategy.hpp"
#include "tcs.hpp"
#include "expr.hpp"
#include "verify.hpp"
