#ifndef HLNET_HLNET_HPP
#define HLNET_HLNET_HPP

#include "bounds.hpp"
#include "fault.hpp"
#include "graph.hpp"
#include "hl_network.hpp"
#include "io.hpp"
#include "isomorphism.hpp"
#include "menger.hpp"
#include "random.hpp"

#endif  // HLNET_HLNET_HPP
