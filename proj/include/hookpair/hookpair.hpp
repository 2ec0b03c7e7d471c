#pragma once

#include "hookpair/error.hpp"
#include "hookpair/partition.hpp"
#include "hookpair/cell_set.hpp"
#include "hookpair/multiset.hpp"
#include "hookpair/regions.hpp"
#include "hookpair/dyck.hpp"
#include "hookpair/bijections.hpp"
#include "hookpair/projective.hpp"
#include "hookpair/render.hpp"
#include "hookpair/serialize.hpp"
#include "hookpair/sweep.hpp"
