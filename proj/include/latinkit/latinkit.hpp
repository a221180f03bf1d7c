#pragma once

#include "latinkit/admissible.hpp"
#include "latinkit/compose.hpp"
#include "latinkit/core.hpp"
#include "latinkit/galois.hpp"
#include "latinkit/io.hpp"
#include "latinkit/plan.hpp"
#include "latinkit/search.hpp"
#include "latinkit/verify.hpp"
