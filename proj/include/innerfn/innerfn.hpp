#pragma once

#include "innerfn/boundary.hpp"
#include "innerfn/catalog.hpp"
#include "innerfn/chain.hpp"
#include "innerfn/classify.hpp"
#include "innerfn/errors.hpp"
#include "innerfn/fourier.hpp"
#include "innerfn/inner.hpp"
#include "innerfn/quadrature.hpp"
