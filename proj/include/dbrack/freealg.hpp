#pragma once

#include "dbrack/algebra.hpp"
#include "dbrack/endo.hpp"
#include "dbrack/errors.hpp"
#include "dbrack/necklace.hpp"
#include "dbrack/perm.hpp"
#include "dbrack/rational.hpp"
#include "dbrack/tensor.hpp"
#include "dbrack/text.hpp"
#include "dbrack/word.hpp"
