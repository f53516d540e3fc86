#pragma once

#include "gcover/catalog.hpp"
#include "gcover/constructors.hpp"
#include "gcover/cover.hpp"
#include "gcover/element_set.hpp"
#include "gcover/errors.hpp"
#include "gcover/group_spec.hpp"
#include "gcover/group_table.hpp"
#include "gcover/quotient.hpp"
#include "gcover/report.hpp"
#include "gcover/subgroup_lattice.hpp"
#include "gcover/verify.hpp"
