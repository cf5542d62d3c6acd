#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "subcorr/cyclo.hpp"
#include "subcorr/perm.hpp"

namespace subcorr {

// Constructions beyond the basic families in perm.hpp. Linear groups act
// on the eight nonzero vectors of F_3^2, ordered lexicographically.
PermGroup gl_2_3();
PermGroup sl_2_3();
// (C3 x C3) : C2 with the involution inverting both factors, on 6 points.
PermGroup generalized_dihedral_c3c3();
// S3 wr C2 on 6 points, order 72.
PermGroup wreath_s3_c2();
// C7 : C3 on 7 points, order 21.
PermGroup frobenius_21();
// (C5 x C5) : C3 acting on the 25 points of the affine plane over F_5.
PermGroup frobenius_75();

// On-disk group description: {"name", "degree", "generators", "provenance"}
// with generators as 1-based image arrays.
struct GroupFile {
  std::string name;
  PermGroup group;
  std::string provenance;
};

GroupFile group_from_json(const nlohmann::json& j);
nlohmann::ordered_json group_to_json(const GroupFile& gf);
GroupFile load_group_file(const std::string& path);
void save_group_file(const GroupFile& gf, const std::string& path);

nlohmann::ordered_json cyclo_to_json(const Cyclotomic& x);
Cyclotomic cyclo_from_json(const nlohmann::json& j);

struct NamedGroup {
  std::string name;
  PermGroup group;
  std::string note;
};
// The fixture corpus written by the fixgen tool and consumed by tests and
// the batch runner.
std::vector<NamedGroup> standard_fixtures();

}  // namespace subcorr
