#pragma once

#include "wzw/error.hpp"
#include "wzw/rational.hpp"
#include "wzw/matrix.hpp"
#include "wzw/latmath.hpp"
#include "wzw/rootsys.hpp"
#include "wzw/spectrum.hpp"
#include "wzw/cohomology.hpp"
#include "wzw/extension.hpp"
#include "wzw/fusion.hpp"
#include "wzw/parallel.hpp"
#include "wzw/json_io.hpp"
#include "wzw/figure.hpp"
#include "wzw/verify.hpp"
