#ifndef RANEY_RANEY_HPP
#define RANEY_RANEY_HPP

#include "raney/ballot.hpp"
#include "raney/error.hpp"
#include "raney/exact.hpp"
#include "raney/io.hpp"
#include "raney/paths.hpp"
#include "raney/threshold.hpp"
#include "raney/trees.hpp"
#include "raney/verify.hpp"

#endif // RANEY_RANEY_HPP
