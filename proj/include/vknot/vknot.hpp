#pragma once

// Umbrella header: the whole library except the JSON bindings, which pull
// in nlohmann::json and live in json_io.hpp.

#include "errors.hpp"
#include "group_ring.hpp"
#include "invariants.hpp"
#include "knot_code.hpp"
#include "knot_group.hpp"
#include "laurent.hpp"
#include "mat2.hpp"
#include "presentation.hpp"
#include "schubert.hpp"
#include "synthesis.hpp"
#include "word.hpp"
