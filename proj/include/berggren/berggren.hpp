#pragma once

#include "berggren/bigint.hpp"
#include "berggren/error.hpp"
#include "berggren/geometry.hpp"
#include "berggren/inradius.hpp"
#include "berggren/matrix.hpp"
#include "berggren/path.hpp"
#include "berggren/ppt.hpp"
#include "berggren/quad_ring.hpp"
#include "berggren/radius.hpp"
#include "berggren/tree.hpp"
