#include "subcorr/catalog.hpp"

#include <array>
#include <fstream>

#include "subcorr/errors.hpp"

namespace subcorr {

namespace {

// Index of the nonzero vector (a, b) of F_3^2 in lex order.
int vec_index(int a, int b) { return 3 * a + b - 1; }

Perm matrix_perm(std::array<int, 4> m) {
  std::vector<int> img(8);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      int a2 = (m[0] * a + m[1] * b) % 3;
      int b2 = (m[2] * a + m[3] * b) % 3;
      img[vec_index(a, b)] = vec_index(a2, b2);
    }
  return Perm(img);
}

Perm affine_perm_5(std::array<int, 4> m, int va, int vb) {
  std::vector<int> img(25);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      int a2 = (m[0] * a + m[1] * b + va) % 5;
      int b2 = (m[2] * a + m[3] * b + vb) % 5;
      img[5 * a + b] = 5 * a2 + b2;
    }
  return Perm(img);
}

}  // namespace

PermGroup gl_2_3() {
  return PermGroup(8, {matrix_perm({1, 1, 0, 1}), matrix_perm({0, 1, 2, 0}),
                       matrix_perm({2, 0, 0, 1})});
}

PermGroup sl_2_3() {
  return PermGroup(8, {matrix_perm({1, 1, 0, 1}), matrix_perm({0, 1, 2, 0})});
}

PermGroup generalized_dihedral_c3c3() {
  return PermGroup(6, {perm_from_cycles(6, {{1, 2, 3}}),
                       perm_from_cycles(6, {{4, 5, 6}}),
                       perm_from_cycles(6, {{2, 3}, {5, 6}})});
}

PermGroup wreath_s3_c2() {
  return wreath_product(symmetric_group(3), cyclic_group(2));
}

PermGroup frobenius_21() {
  return PermGroup(7, {perm_from_cycles(7, {{1, 2, 3, 4, 5, 6, 7}}),
                       perm_from_cycles(7, {{2, 3, 5}, {4, 7, 6}})});
}

PermGroup frobenius_75() {
  return PermGroup(25, {affine_perm_5({1, 0, 0, 1}, 1, 0),
                        affine_perm_5({1, 0, 0, 1}, 0, 1),
                        affine_perm_5({0, 4, 1, 4}, 0, 0)});
}

GroupFile group_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("name") || !j.contains("degree") ||
      !j.contains("generators"))
    throw IngestError("group file needs name, degree and generators");
  GroupFile gf;
  try {
    gf.name = j.at("name").get<std::string>();
    int degree = j.at("degree").get<int>();
    if (degree < 0) throw IngestError("negative degree");
    std::vector<Perm> gens;
    for (const auto& arr : j.at("generators")) {
      std::vector<int> img = arr.get<std::vector<int>>();
      if ((int)img.size() != degree)
        throw IngestError("generator length does not match degree");
      for (int& x : img) x -= 1;  // stored 1-based
      gens.push_back(Perm(img));
    }
    gf.group = PermGroup(degree, gens);
    if (j.contains("provenance"))
      gf.provenance = j.at("provenance").get<std::string>();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw IngestError(std::string("malformed group file: ") + e.what());
  }
  return gf;
}

nlohmann::ordered_json group_to_json(const GroupFile& gf) {
  nlohmann::ordered_json j;
  j["name"] = gf.name;
  j["degree"] = gf.group.degree();
  auto gens = nlohmann::ordered_json::array();
  for (const Perm& g : gf.group.generators()) {
    std::vector<int> img = g.images();
    for (int& x : img) x += 1;
    gens.push_back(img);
  }
  j["generators"] = gens;
  j["provenance"] = gf.provenance;
  return j;
}

GroupFile load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open group file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw IngestError(std::string("invalid json in ") + path + ": " + e.what());
  }
  return group_from_json(j);
}

void save_group_file(const GroupFile& gf, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IngestError("cannot write group file: " + path);
  out << group_to_json(gf).dump(2) << "\n";
}

nlohmann::ordered_json cyclo_to_json(const Cyclotomic& x) {
  nlohmann::ordered_json j;
  j["conductor"] = x.conductor();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [e, q] : x.terms()) {
    terms.push_back({{"exp", e},
                     {"num", q.get_num().get_str()},
                     {"den", q.get_den().get_str()}});
  }
  j["terms"] = terms;
  return j;
}

Cyclotomic cyclo_from_json(const nlohmann::json& j) {
  try {
    long n = j.at("conductor").get<long>();
    std::vector<std::pair<long, Rational>> terms;
    for (const auto& t : j.at("terms")) {
      Rational q(mpz_class(t.at("num").get<std::string>()),
                 mpz_class(t.at("den").get<std::string>()));
      q.canonicalize();
      terms.push_back({t.at("exp").get<long>(), q});
    }
    return Cyclotomic::from_terms(n, terms);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw IngestError(std::string("malformed cyclotomic: ") + e.what());
  }
}

std::vector<NamedGroup> standard_fixtures() {
  std::vector<NamedGroup> out;
  auto add = [&](const std::string& name, const PermGroup& g,
                 const std::string& note) {
    out.push_back({name, g, note});
  };
  add("s3", symmetric_group(3), "symmetric group on 3 points");
  add("s4", symmetric_group(4), "symmetric group on 4 points");
  add("s5", symmetric_group(5), "symmetric group on 5 points");
  add("s6", symmetric_group(6), "symmetric group on 6 points");
  add("a4", alternating_group(4), "alternating group on 4 points");
  add("a5", alternating_group(5), "alternating group on 5 points");
  add("d8", dihedral_group(4), "dihedral group of order 8");
  add("q8", quaternion_group(), "quaternion group in its regular action");
  add("gd18", generalized_dihedral_c3c3(),
      "generalized dihedral group over C3 x C3");
  add("f21", frobenius_21(), "Frobenius group of order 21");
  add("f21xc2", direct_product(frobenius_21(), cyclic_group(2)),
      "order 42, cyclic central factor");
  add("f21xc3", direct_product(frobenius_21(), cyclic_group(3)),
      "order 63, cyclic central factor");
  add("f75", frobenius_75(), "Frobenius group of order 75 in affine action");
  add("s3wrc2", wreath_s3_c2(), "wreath product of S3 by C2, order 72");
  add("s3wrc2xc3", direct_product(wreath_s3_c2(), cyclic_group(3)),
      "order 216, cyclic direct factor");
  add("a5xs3", direct_product(alternating_group(5), symmetric_group(3)),
      "order 360 on 8 points");
  add("gl23", gl_2_3(), "general linear group of degree 2 over F_3");
  add("sl23", sl_2_3(), "special linear group of degree 2 over F_3");
  return out;
}

}  // namespace subcorr
