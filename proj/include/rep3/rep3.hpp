#pragma once

#include "rep3/canonical.hpp"
#include "rep3/combinations.hpp"
#include "rep3/enumerate.hpp"
#include "rep3/error.hpp"
#include "rep3/feasible.hpp"
#include "rep3/graph.hpp"
#include "rep3/graph6.hpp"
#include "rep3/harness.hpp"
#include "rep3/parallel.hpp"
#include "rep3/repetition.hpp"
#include "rep3/serialize.hpp"
#include "rep3/solver.hpp"
