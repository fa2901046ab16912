#pragma once

// Whitehead graphs for free groups: build and minimize word collections,
// splice graphs and simulate covers, and certify collections as not
// (virtually) geometric via regularity, edge connectivity and non-planarity.

#include "wgeo/automorphism.hpp"
#include "wgeo/certify.hpp"
#include "wgeo/cuts.hpp"
#include "wgeo/isomorphism.hpp"
#include "wgeo/minor.hpp"
#include "wgeo/multigraph.hpp"
#include "wgeo/planarity.hpp"
#include "wgeo/rng.hpp"
#include "wgeo/splice.hpp"
#include "wgeo/whitehead.hpp"
#include "wgeo/word.hpp"
