#pragma once

#include "hizeta/error.hpp"
#include "hizeta/precision.hpp"
#include "hizeta/numerics.hpp"
#include "hizeta/weights.hpp"
#include "hizeta/formal_series.hpp"
#include "hizeta/barnes.hpp"
#include "hizeta/parse.hpp"
#include "hizeta/sequences.hpp"
#include "hizeta/higher_zeta.hpp"
#include "hizeta/explicit_formula.hpp"
