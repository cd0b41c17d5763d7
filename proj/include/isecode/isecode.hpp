#pragma once

#include "isecode/bits.hpp"
#include "isecode/constructions.hpp"
#include "isecode/correlation.hpp"
#include "isecode/errors.hpp"
#include "isecode/extremal_search.hpp"
#include "isecode/family.hpp"
#include "isecode/family_io.hpp"
#include "isecode/measures.hpp"
#include "isecode/rational.hpp"
#include "isecode/word_space.hpp"
