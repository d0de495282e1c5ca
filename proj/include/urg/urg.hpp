// SPDX-License-Identifier: MIT
//
// Umbrella header for the urg library.
#ifndef URG_URG_HPP
#define URG_URG_HPP

#include "urg/alphabet.hpp"
#include "urg/analysis.hpp"
#include "urg/code_trees.hpp"
#include "urg/empirical.hpp"
#include "urg/guesswork.hpp"
#include "urg/kt.hpp"
#include "urg/lz78.hpp"
#include "urg/lz_samplers.hpp"
#include "urg/polylog.hpp"
#include "urg/rng.hpp"
#include "urg/source_json.hpp"
#include "urg/sources.hpp"
#include "urg/stats.hpp"
#include "urg/strategies.hpp"
#include "urg/version.hpp"

#endif  // URG_URG_HPP
