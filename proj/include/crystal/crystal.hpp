#pragma once
// Umbrella header.

#include "tableau.hpp"
#include "typeA.hpp"
#include "qpoly.hpp"
#include "rmatrix.hpp"
#include "rigged.hpp"
#include "virtual.hpp"
#include "fermionic.hpp"
#include "json_io.hpp"
