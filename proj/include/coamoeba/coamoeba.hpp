#pragma once

#include "coamoeba/error.hpp"
#include "coamoeba/exact.hpp"
#include "coamoeba/gale.hpp"
#include "coamoeba/geometry.hpp"
#include "coamoeba/analytic.hpp"
#include "coamoeba/report.hpp"
#include "coamoeba/svg.hpp"
