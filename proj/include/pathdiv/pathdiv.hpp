#pragma once

#include "pathdiv/digraph.hpp"
#include "pathdiv/disjoint.hpp"
#include "pathdiv/errors.hpp"
#include "pathdiv/ingest.hpp"
#include "pathdiv/ppr.hpp"
#include "pathdiv/report.hpp"
#include "pathdiv/syngen.hpp"
