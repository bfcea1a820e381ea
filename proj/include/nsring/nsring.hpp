#pragma once

// Umbrella header: the whole library in dependency order.

#include "nsring/errors.hpp"        // IWYU pragma: export
#include "nsring/semigroup.hpp"     // IWYU pragma: export
#include "nsring/relative_ideal.hpp"  // IWYU pragma: export
#include "nsring/classification.hpp"  // IWYU pragma: export
#include "nsring/enumeration.hpp"   // IWYU pragma: export
#include "nsring/families.hpp"      // IWYU pragma: export
#include "nsring/sweep.hpp"         // IWYU pragma: export
#include "nsring/report.hpp"        // IWYU pragma: export
