#pragma once

#include "gyroshape/design.hpp"
#include "gyroshape/dynamics.hpp"
#include "gyroshape/envelope.hpp"
#include "gyroshape/error.hpp"
#include "gyroshape/inscribed.hpp"
#include "gyroshape/oracle.hpp"
#include "gyroshape/resonance.hpp"
