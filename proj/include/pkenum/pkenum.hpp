#pragma once

// Umbrella header: exact and asymptotic enumeration of k-noncrossing
// pseudoknot structures with arc-length and stack-length constraints.

#include "pkenum/asymptotics.hpp"
#include "pkenum/combinatorics.hpp"
#include "pkenum/diagram.hpp"
#include "pkenum/diagram_io.hpp"
#include "pkenum/enumeration.hpp"
#include "pkenum/genfunc.hpp"
#include "pkenum/golden.hpp"
#include "pkenum/numeric.hpp"
#include "pkenum/oracle.hpp"
#include "pkenum/series.hpp"
#include "pkenum/walks.hpp"
