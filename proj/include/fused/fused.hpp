#pragma once

#include "fused/braid.hpp"
#include "fused/catalog.hpp"
#include "fused/harness.hpp"
#include "fused/invariant.hpp"
#include "fused/io.hpp"
#include "fused/normal_form.hpp"
#include "fused/permutation.hpp"
#include "fused/random.hpp"
#include "fused/reduction.hpp"
