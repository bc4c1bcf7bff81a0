#pragma once

#include "ptcalc/abelian.hpp"
#include "ptcalc/cobordism.hpp"
#include "ptcalc/errors.hpp"
#include "ptcalc/hall.hpp"
#include "ptcalc/rewrite.hpp"
#include "ptcalc/space.hpp"
#include "ptcalc/sphere_table.hpp"
#include "ptcalc/splitter.hpp"
#include "ptcalc/thom.hpp"
