#pragma once

#include "samf/config.hpp"
#include "samf/detail.hpp"
#include "samf/error.hpp"
#include "samf/fixture.hpp"
#include "samf/fuse.hpp"
#include "samf/image.hpp"
#include "samf/imgproc.hpp"
#include "samf/io.hpp"
#include "samf/metrics.hpp"
#include "samf/recursive_filter.hpp"
#include "samf/saliency.hpp"
#include "samf/segment.hpp"
#include "samf/ssim.hpp"
