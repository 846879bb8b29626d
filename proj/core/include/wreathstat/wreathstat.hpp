#pragma once

#include "wreathstat/bijections.hpp"
#include "wreathstat/colored_perm.hpp"
#include "wreathstat/errors.hpp"
#include "wreathstat/identities.hpp"
#include "wreathstat/letter_order.hpp"
#include "wreathstat/polyhedral.hpp"
#include "wreathstat/series.hpp"
#include "wreathstat/statistics.hpp"
