#pragma once

#include <string>

#include "osculum/gstructure.hpp"
#include "osculum/verify.hpp"

namespace osculum {

Json to_json(const ClassTriple& c);
Json to_json(const RationalCurve& c);  // coefficient vectors per component, low degree first
Json to_json(const CurveCertificate& c);
Json to_json(const TrialRecord& t);
Json to_json(const MembershipReport& r);
Json to_json(const ProjectionReport& r);
Json to_json(const SpecialnessWitness& w);
Json to_json(const InequivalenceReport& r);

std::string render_table(const MembershipReport& r);
std::string render_table(const ProjectionReport& r);
std::string render_table(const SpecialnessWitness& w);

// Rows of cells printed as left-aligned columns separated by two spaces.
std::string aligned(const std::vector<std::vector<std::string>>& rows);

}  // namespace osculum
