#pragma once

#include "zagreb/canon.hpp"
#include "zagreb/construct.hpp"
#include "zagreb/enumerate.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/io.hpp"
#include "zagreb/matching.hpp"
#include "zagreb/parallel.hpp"
#include "zagreb/random.hpp"
#include "zagreb/report.hpp"
#include "zagreb/verify.hpp"
