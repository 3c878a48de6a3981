#pragma once

#include "hyperball/catalog.hpp"
#include "hyperball/density.hpp"
#include "hyperball/error.hpp"
#include "hyperball/isometry.hpp"
#include "hyperball/lobachevsky.hpp"
#include "hyperball/metric.hpp"
#include "hyperball/orbifold.hpp"
#include "hyperball/reference_tables.hpp"
#include "hyperball/schlafli.hpp"
#include "hyperball/volume.hpp"
