#pragma once

#include "brouwer.hpp"
#include "decide.hpp"
#include "duality.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "formula.hpp"
#include "io.hpp"
#include "kripke.hpp"
#include "poset.hpp"
#include "search.hpp"
#include "sperner.hpp"
