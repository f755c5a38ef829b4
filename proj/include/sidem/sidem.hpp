#pragma once

#include "errors.hpp"
#include "element_set.hpp"
#include "ring.hpp"
#include "ideal.hpp"
#include "module.hpp"
#include "present.hpp"
#include "mult_set.hpp"
#include "localize.hpp"
#include "construct.hpp"
#include "props.hpp"
