#pragma once

#include "linarr/arrangement.hpp"
#include "linarr/admissibility.hpp"
#include "linarr/decide.hpp"
#include "linarr/generator.hpp"
#include "linarr/geometry.hpp"
#include "linarr/graphs.hpp"
#include "linarr/incidence.hpp"
#include "linarr/io.hpp"
#include "linarr/localsystem.hpp"
#include "linarr/multinet.hpp"
#include "linarr/oracle.hpp"
#include "linarr/rational.hpp"
#include "linarr/render.hpp"
#include "linarr/report.hpp"
