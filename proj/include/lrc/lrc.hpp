#pragma once

#include "analysis.hpp"
#include "builders.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "galois_ring.hpp"
#include "linear_code.hpp"
#include "poly.hpp"
#include "poly_algebra.hpp"
#include "product_ring.hpp"
#include "sets.hpp"
#include "simulate.hpp"
#include "teichmuller.hpp"
