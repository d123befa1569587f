#pragma once

#include "sombor/error.hpp"
#include "sombor/graph.hpp"
#include "sombor/canonical.hpp"
#include "sombor/indices.hpp"
#include "sombor/enumerate.hpp"
#include "sombor/transforms.hpp"
#include "sombor/families.hpp"
#include "sombor/regression.hpp"
#include "sombor/format.hpp"
