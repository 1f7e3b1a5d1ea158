#pragma once

#include "goi/combinatory.hpp"
#include "goi/error.hpp"
#include "goi/generate.hpp"
#include "goi/goi_unify.hpp"
#include "goi/inference.hpp"
#include "goi/involution.hpp"
#include "goi/lambda.hpp"
#include "goi/properties.hpp"
#include "goi/types.hpp"
#include "goi/unify.hpp"
