#pragma once

#include "tamegen/rational.hpp"
#include "tamegen/polynomial.hpp"
#include "tamegen/polymap.hpp"
#include "tamegen/constructions.hpp"
#include "tamegen/verifier.hpp"
#include "tamegen/construct.hpp"
#include "tamegen/text.hpp"
