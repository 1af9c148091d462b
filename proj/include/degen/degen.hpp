#pragma once

// Umbrella header.

#include <degen/complexes.hpp>
#include <degen/config.hpp>
#include <degen/coherent.hpp>
#include <degen/cover.hpp>
#include <degen/cy3.hpp>
#include <degen/delta.hpp>
#include <degen/exact.hpp>
#include <degen/fixtures.hpp>
#include <degen/json_io.hpp>
#include <degen/neron.hpp>
#include <degen/weight.hpp>
