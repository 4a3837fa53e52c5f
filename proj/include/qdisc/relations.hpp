#pragma once

#include "qdisc/report.hpp"

namespace qdisc {

// Checks every relation of the two-dimensional calculus on the disc: the
// differentials of the generators, the reconstruction of w and w* from dz
// and dz*, the commutation rules for 1- and 2-forms, the intermediate
// relations leading to the structure of the 2-forms, and the final table of
// products. Each record is labelled with the equation tag it checks.
Report verify_disc_relations();
void verify_disc_relations(Report& report);

}  // namespace qdisc
