#pragma once

#include "errgraph/exact.hpp"
#include "errgraph/graph.hpp"
#include "errgraph/numbers.hpp"
#include "errgraph/permutation.hpp"
#include "errgraph/reconstruct.hpp"
#include "errgraph/spaces.hpp"
#include "errgraph/symt.hpp"
