#pragma once

#include "padyn/backward.hpp"
#include "padyn/congruence.hpp"
#include "padyn/error.hpp"
#include "padyn/hensel.hpp"
#include "padyn/integer.hpp"
#include "padyn/padic.hpp"
#include "padyn/parse.hpp"
#include "padyn/polynomial.hpp"
#include "padyn/serialize.hpp"
