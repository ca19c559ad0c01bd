#pragma once

#include "braxtope/face_lattice.hpp"
#include "braxtope/families.hpp"
#include "braxtope/geometry.hpp"
#include "braxtope/report.hpp"
#include "braxtope/serialization.hpp"
#include "braxtope/triangulation.hpp"
#include "braxtope/verification.hpp"
#include "braxtope/vertex_set.hpp"
