#pragma once

#include "z4poset/errors.hpp"
#include "z4poset/ring.hpp"
#include "z4poset/poset.hpp"
#include "z4poset/construction.hpp"
#include "z4poset/analysis.hpp"
#include "z4poset/report.hpp"
#include "z4poset/reproduce.hpp"
