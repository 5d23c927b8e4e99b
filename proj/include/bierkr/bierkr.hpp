/**
 * Umbrella header: Bier spheres, threshold complexes, Kantorovich-Rubinstein
 * polytopes of weighted graphs, and exact theorem verifiers.
 */

#ifndef BIERKR_BIERKR_HPP
#define BIERKR_BIERKR_HPP

#include "geometry.hpp"
#include "instance_gen.hpp"
#include "json_io.hpp"
#include "linalg.hpp"
#include "lp.hpp"
#include "metricgraph.hpp"
#include "rational.hpp"
#include "realization.hpp"
#include "report.hpp"
#include "simplicial.hpp"
#include "threshold.hpp"
#include "transport.hpp"

#endif  // BIERKR_BIERKR_HPP
