#pragma once

#include "turan/canonical.hpp"
#include "turan/coloring.hpp"
#include "turan/constructions.hpp"
#include "turan/embedding.hpp"
#include "turan/errors.hpp"
#include "turan/generate.hpp"
#include "turan/graph.hpp"
#include "turan/graph6.hpp"
#include "turan/numbers.hpp"
#include "turan/parallel.hpp"
#include "turan/patterns.hpp"
#include "turan/report.hpp"
#include "turan/search.hpp"
#include "turan/subgraph.hpp"
