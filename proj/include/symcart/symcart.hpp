#pragma once

#include "catalog.hpp"
#include "error.hpp"
#include "example93.hpp"
#include "invariants.hpp"
#include "jets.hpp"
#include "lie.hpp"
#include "matrix.hpp"
#include "parse.hpp"
#include "poly.hpp"
#include "random.hpp"
#include "report.hpp"
#include "roots.hpp"
#include "scalar.hpp"
#include "spectrum.hpp"
#include "suite.hpp"
#include "vecfields.hpp"
