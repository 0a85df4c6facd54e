// Umbrella header.
#pragma once

#include "mgonal/bounds.hpp"
#include "mgonal/completion.hpp"
#include "mgonal/coupled.hpp"
#include "mgonal/criteria.hpp"
#include "mgonal/escalation.hpp"
#include "mgonal/forms.hpp"
#include "mgonal/polygonal.hpp"
#include "mgonal/serialize.hpp"
#include "mgonal/sweep.hpp"
