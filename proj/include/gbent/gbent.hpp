#pragma once

#include "gbent/constructions.hpp"
#include "gbent/cyclotomic.hpp"
#include "gbent/errors.hpp"
#include "gbent/gbfunc.hpp"
#include "gbent/gf2m.hpp"
#include "gbent/io.hpp"
#include "gbent/rds.hpp"
#include "gbent/space.hpp"
#include "gbent/vectorial.hpp"
