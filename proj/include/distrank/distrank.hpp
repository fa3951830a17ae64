#pragma once

#include "distrank/bounds.hpp"
#include "distrank/distance.hpp"
#include "distrank/elimination.hpp"
#include "distrank/enumerate.hpp"
#include "distrank/error.hpp"
#include "distrank/graph.hpp"
#include "distrank/graph_io.hpp"
#include "distrank/isomorphism.hpp"
#include "distrank/matrix.hpp"
#include "distrank/rational.hpp"
#include "distrank/threshold.hpp"
#include "distrank/trivially_perfect.hpp"
#include "distrank/twin_quotient.hpp"
