#pragma once

#include "decwa/dataset.hpp"
#include "decwa/density.hpp"
#include "decwa/error.hpp"
#include "decwa/evaluation.hpp"
#include "decwa/graph.hpp"
#include "decwa/metrics.hpp"
#include "decwa/partition.hpp"
#include "decwa/pipeline.hpp"
#include "decwa/tuning.hpp"
