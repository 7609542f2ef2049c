#pragma once

#include "rbp/approx.hpp"
#include "rbp/bench.hpp"
#include "rbp/circle.hpp"
#include "rbp/core.hpp"
#include "rbp/exact.hpp"
#include "rbp/generators.hpp"
#include "rbp/graph.hpp"
#include "rbp/line.hpp"
#include "rbp/oracle.hpp"
#include "rbp/render.hpp"
