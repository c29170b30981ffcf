#pragma once

#include "levy/continuants.hpp"
#include "levy/empirical.hpp"
#include "levy/error.hpp"
#include "levy/fraction.hpp"
#include "levy/quadratic.hpp"
#include "levy/slope.hpp"
#include "levy/words.hpp"
