#pragma once

#include "tlwg/errors.hpp"
#include "tlwg/jones_wenzl.hpp"
#include "tlwg/matrix.hpp"
#include "tlwg/numeric.hpp"
#include "tlwg/pairing.hpp"
#include "tlwg/polynomial.hpp"
#include "tlwg/rational_function.hpp"
#include "tlwg/serialization.hpp"
#include "tlwg/series.hpp"
#include "tlwg/tl_element.hpp"
#include "tlwg/weingarten_graph.hpp"
#include "tlwg/weingarten_oracle.hpp"
