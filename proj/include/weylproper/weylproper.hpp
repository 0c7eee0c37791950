#pragma once

#include "weylproper/error.hpp"
#include "weylproper/exact.hpp"
#include "weylproper/linalg.hpp"
#include "weylproper/root_data.hpp"
#include "weylproper/sl2_orbits.hpp"
#include "weylproper/criteria.hpp"
#include "weylproper/certificate_json.hpp"
#include "weylproper/search.hpp"
#include "weylproper/verify.hpp"
