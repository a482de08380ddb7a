#pragma once

#include "motreal/abelian_group.hpp"
#include "motreal/chart.hpp"
#include "motreal/completion.hpp"
#include "motreal/errors.hpp"
#include "motreal/hom_oracle.hpp"
#include "motreal/int_matrix.hpp"
#include "motreal/integer.hpp"
#include "motreal/james.hpp"
#include "motreal/partial_fractions.hpp"
#include "motreal/range_classifier.hpp"
#include "motreal/splitting.hpp"
#include "motreal/verdict.hpp"
