// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 the parqa authors
//
// Convenience umbrella, pulls in the whole library.
#ifndef PARQA_PARQA_HPP
#define PARQA_PARQA_HPP

#include "parqa/clique.hpp"
#include "parqa/embedder.hpp"
#include "parqa/embedding.hpp"
#include "parqa/errors.hpp"
#include "parqa/experiments.hpp"
#include "parqa/hardware.hpp"
#include "parqa/io.hpp"
#include "parqa/metrics.hpp"
#include "parqa/model.hpp"
#include "parqa/parametrize.hpp"
#include "parqa/reports.hpp"
#include "parqa/rng.hpp"
#include "parqa/sampler.hpp"
#include "parqa/unembed.hpp"

#endif
