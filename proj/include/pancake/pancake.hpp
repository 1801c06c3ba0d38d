#pragma once

#include "pancake/permutation.hpp"
#include "pancake/topology.hpp"
#include "pancake/representation.hpp"
#include "pancake/routing.hpp"
#include "pancake/embedding.hpp"
#include "pancake/verify.hpp"
#include "pancake/io.hpp"
#include "pancake/suite.hpp"
