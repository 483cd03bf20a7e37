#pragma once

#include "bijection.hpp"
#include "composition.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "io.hpp"
#include "tableau.hpp"
#include "verify.hpp"
