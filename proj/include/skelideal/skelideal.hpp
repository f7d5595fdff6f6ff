#pragma once

#include "config.hpp"
#include "containment.hpp"
#include "error.hpp"
#include "ideal.hpp"
#include "io.hpp"
#include "limits.hpp"
#include "monomial.hpp"
#include "simplicial.hpp"
#include "verify.hpp"
