#pragma once

#include "gyromean/error.hpp"
#include "gyromean/spectral.hpp"
#include "gyromean/means.hpp"
#include "gyromean/metrics.hpp"
#include "gyromean/order.hpp"
#include "gyromean/gyro.hpp"
#include "gyromean/gyro_cone.hpp"
#include "gyromean/gyro_density.hpp"
#include "gyromean/ball.hpp"
#include "gyromean/closed_forms.hpp"
#include "gyromean/random.hpp"
#include "gyromean/matrix_io.hpp"
#include "gyromean/campaign.hpp"
