#pragma once

#include "catca/error.hpp"
#include "catca/groups.hpp"
#include "catca/alphabet.hpp"
#include "catca/finset.hpp"
#include "catca/finvect.hpp"
#include "catca/finposet.hpp"
#include "catca/rel.hpp"
#include "catca/configuration.hpp"
#include "catca/ca.hpp"
#include "catca/gca.hpp"
#include "catca/json_io.hpp"
#include "catca/checks.hpp"
#include "catca/sampling.hpp"
#include "catca/suites.hpp"
