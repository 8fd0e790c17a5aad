#pragma once

#include "twistframe/gf2.hpp"
#include "twistframe/quad_form.hpp"
#include "twistframe/mapping_class.hpp"
#include "twistframe/heegaard.hpp"
#include "twistframe/solver.hpp"
