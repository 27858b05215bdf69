// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cmix Authors

#pragma once

#include "cmix/corpus.hpp"
#include "cmix/corpus_io.hpp"
#include "cmix/corpus_stats.hpp"
#include "cmix/error.hpp"
#include "cmix/language_tag.hpp"
#include "cmix/metrics.hpp"
#include "cmix/report.hpp"
#include "cmix/synthgen.hpp"
