#pragma once

#include "lmcat/error.hpp"
#include "lmcat/lorentz.hpp"
#include "lmcat/circle.hpp"
#include "lmcat/profile.hpp"
#include "lmcat/surface.hpp"
#include "lmcat/rootfind.hpp"
#include "lmcat/counting.hpp"
#include "lmcat/mesh.hpp"
#include "lmcat/descriptor.hpp"
#include "lmcat/io.hpp"
