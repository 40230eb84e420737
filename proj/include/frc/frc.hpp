#pragma once

#include "frc/bounds.hpp"
#include "frc/catalog.hpp"
#include "frc/designs.hpp"
#include "frc/dress.hpp"
#include "frc/error.hpp"
#include "frc/exact.hpp"
#include "frc/gf256.hpp"
#include "frc/hierarchy.hpp"
#include "frc/incidence.hpp"
#include "frc/io.hpp"
#include "frc/point_set.hpp"
#include "frc/products.hpp"
