#pragma once

#include "knotmat/colorability.hpp"
#include "knotmat/dehn.hpp"
#include "knotmat/diagram.hpp"
#include "knotmat/error.hpp"
#include "knotmat/goeritz.hpp"
#include "knotmat/int.hpp"
#include "knotmat/intmat.hpp"
#include "knotmat/reconstruct.hpp"
#include "knotmat/regions.hpp"
#include "knotmat/serialize.hpp"
