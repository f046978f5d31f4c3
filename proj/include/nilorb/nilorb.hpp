#pragma once

#include "nilorb/error.hpp"
#include "nilorb/rootsys.hpp"
#include "nilorb/orbits.hpp"
#include "nilorb/induction.hpp"
#include "nilorb/linalg.hpp"
#include "nilorb/markings.hpp"
#include "nilorb/levi.hpp"
#include "nilorb/cones.hpp"
#include "nilorb/oracle.hpp"
#include "nilorb/json.hpp"
