#pragma once

#include "serialize.hpp"
#include "verify.hpp"
