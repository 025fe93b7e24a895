// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

// The packaged benchmark_main archive is LTO bytecode tied to another compiler
// build, so the entry point is provided here.

#include <benchmark/benchmark.h>

BENCHMARK_MAIN();
