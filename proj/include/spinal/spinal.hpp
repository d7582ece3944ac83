#pragma once

#include "spinal/datum.hpp"
#include "spinal/element_index.hpp"
#include "spinal/errors.hpp"
#include "spinal/fp.hpp"
#include "spinal/hnn.hpp"
#include "spinal/io.hpp"
#include "spinal/lifting.hpp"
#include "spinal/nucleus.hpp"
#include "spinal/perm.hpp"
#include "spinal/portrait.hpp"
#include "spinal/random.hpp"
#include "spinal/wreath.hpp"
#include "spinal/word.hpp"
#include "spinal/selftest.hpp"
