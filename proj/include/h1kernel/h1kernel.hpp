#pragma once

// Umbrella include.

#include "h1kernel/cli.hpp"
#include "h1kernel/closed_form.hpp"
#include "h1kernel/diagram.hpp"
#include "h1kernel/errors.hpp"
#include "h1kernel/group_spec.hpp"
#include "h1kernel/kernel.hpp"
#include "h1kernel/multitype.hpp"
#include "h1kernel/permutation.hpp"
#include "h1kernel/presets.hpp"
#include "h1kernel/table.hpp"
#include "h1kernel/verify.hpp"
#include "h1kernel/vertex_set.hpp"
