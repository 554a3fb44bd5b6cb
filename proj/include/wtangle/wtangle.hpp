#pragma once

#include "wtangle/core.hpp"
#include "wtangle/densmat.hpp"
#include "wtangle/symstate.hpp"
#include "wtangle/tangle.hpp"
