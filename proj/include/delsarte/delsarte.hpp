#pragma once

#include "delsarte/rational.hpp"
#include "delsarte/matrix.hpp"
#include "delsarte/character.hpp"
#include "delsarte/surface.hpp"
#include "delsarte/group.hpp"
#include "delsarte/hodge.hpp"
#include "delsarte/symbolic.hpp"
#include "delsarte/pipeline.hpp"
#include "delsarte/quasipoly.hpp"
#include "delsarte/table.hpp"
#include "delsarte/verify.hpp"
#include "delsarte/parallel.hpp"
