#pragma once

#include "trigraph/classify.hpp"
#include "trigraph/cycles.hpp"
#include "trigraph/generators.hpp"
#include "trigraph/graph.hpp"
#include "trigraph/io.hpp"
#include "trigraph/isomorphism.hpp"
#include "trigraph/subgraph.hpp"
#include "trigraph/survey.hpp"
#include "trigraph/transforms.hpp"
#include "trigraph/triangle_graph.hpp"
#include "trigraph/tuza.hpp"
