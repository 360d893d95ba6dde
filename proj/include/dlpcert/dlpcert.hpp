#ifndef DLPCERT_DLPCERT_HPP
#define DLPCERT_DLPCERT_HPP

// Umbrella header: exact dual certificates for the higher-order Delsarte LP
// hierarchies on linear codes.

#include "certificates.hpp"
#include "completeness.hpp"
#include "config_space.hpp"
#include "errors.hpp"
#include "fq.hpp"
#include "grid.hpp"
#include "json_io.hpp"
#include "krawtchouk.hpp"
#include "lift.hpp"
#include "oracle.hpp"
#include "qcomb.hpp"
#include "rational.hpp"
#include "simplex.hpp"
#include "spectral.hpp"
#include "subspaces.hpp"
#include "valid.hpp"

#endif
