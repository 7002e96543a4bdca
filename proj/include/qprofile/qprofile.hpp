#ifndef QPROFILE_QPROFILE_HPP
#define QPROFILE_QPROFILE_HPP

#include "qprofile/counting.hpp"
#include "qprofile/ffield.hpp"
#include "qprofile/fqlinalg.hpp"
#include "qprofile/fqpoly.hpp"
#include "qprofile/io.hpp"
#include "qprofile/oracle.hpp"
#include "qprofile/partial_map.hpp"
#include "qprofile/partition.hpp"
#include "qprofile/profiles.hpp"
#include "qprofile/qpolynomial.hpp"

#endif
