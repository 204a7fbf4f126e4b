#pragma once

#include "simsheaf/error.hpp"
#include "simsheaf/export.hpp"
#include "simsheaf/format.hpp"
#include "simsheaf/graph.hpp"
#include "simsheaf/matrix.hpp"
#include "simsheaf/matrix_io.hpp"
#include "simsheaf/sheaf.hpp"
#include "simsheaf/similarity.hpp"
#include "simsheaf/threshold.hpp"
#include "simsheaf/vector.hpp"
