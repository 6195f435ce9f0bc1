// Copyright (c) 2026 afsolve contributors
// SPDX-License-Identifier: MIT

#ifndef AFSOLVE_AFSOLVE_HPP
#define AFSOLVE_AFSOLVE_HPP

#include "afsolve/apx.hpp"
#include "afsolve/arg_set.hpp"
#include "afsolve/framework.hpp"
#include "afsolve/ideal.hpp"
#include "afsolve/labelling_search.hpp"
#include "afsolve/query.hpp"
#include "afsolve/range_engine.hpp"
#include "afsolve/semantics.hpp"

#endif  // AFSOLVE_AFSOLVE_HPP
