#pragma once

#include "splint/error.hpp"
#include "splint/weightlat.hpp"
#include "splint/rootsys.hpp"
#include "splint/chars.hpp"
#include "splint/branch.hpp"
#include "splint/schur.hpp"
#include "splint/rules.hpp"
#include "splint/io.hpp"
#include "splint/disk_cache.hpp"
