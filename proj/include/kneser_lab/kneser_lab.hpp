#pragma once

#include "kneser_lab/bridge.hpp"
#include "kneser_lab/constructions.hpp"
#include "kneser_lab/error.hpp"
#include "kneser_lab/linear_code.hpp"
#include "kneser_lab/parallel.hpp"
#include "kneser_lab/prime_field.hpp"
#include "kneser_lab/random_instances.hpp"
#include "kneser_lab/report.hpp"
#include "kneser_lab/search.hpp"
#include "kneser_lab/set_family.hpp"
#include "kneser_lab/stabilizer.hpp"
