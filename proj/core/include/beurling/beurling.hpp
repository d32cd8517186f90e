#pragma once

#include "beurling/containment.hpp"
#include "beurling/families.hpp"
#include "beurling/inner.hpp"
#include "beurling/jet.hpp"
#include "beurling/moebius.hpp"
#include "beurling/oracle.hpp"
#include "beurling/selfmap.hpp"
#include "beurling/types.hpp"
#include "beurling/verdict.hpp"
