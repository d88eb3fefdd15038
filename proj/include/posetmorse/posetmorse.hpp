#pragma once

// Umbrella header.

#include "bijection.hpp"
#include "cache.hpp"
#include "chains.hpp"
#include "closed_form.hpp"
#include "crosscheck.hpp"
#include "error.hpp"
#include "iso_search.hpp"
#include "morse.hpp"
#include "permutation.hpp"
#include "poset.hpp"
#include "report.hpp"
#include "word.hpp"
