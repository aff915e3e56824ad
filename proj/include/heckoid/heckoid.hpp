#pragma once

// Umbrella header: slope arithmetic, words and sequence invariants, the
// Farey-orbit machinery, small cancellation checks, trace certificates, and
// the decision layer on top of them.

#include "heckoid/bigint.hpp"
#include "heckoid/cli.hpp"
#include "heckoid/decide.hpp"
#include "heckoid/errors.hpp"
#include "heckoid/farey.hpp"
#include "heckoid/json_io.hpp"
#include "heckoid/kleinian.hpp"
#include "heckoid/presentation.hpp"
#include "heckoid/rational.hpp"
#include "heckoid/smallcancel.hpp"
#include "heckoid/verify.hpp"
#include "heckoid/word.hpp"
