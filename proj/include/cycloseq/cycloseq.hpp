#pragma once

#include "cycloseq/analytics.hpp"
#include "cycloseq/bignat.hpp"
#include "cycloseq/coeffs.hpp"
#include "cycloseq/errors.hpp"
#include "cycloseq/exactmath.hpp"
#include "cycloseq/oracle.hpp"
#include "cycloseq/pattern.hpp"
#include "cycloseq/patterncounts.hpp"
#include "cycloseq/physics.hpp"
#include "cycloseq/tnumbers.hpp"
#include "cycloseq/verify.hpp"
