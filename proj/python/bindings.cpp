#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subcorr/catalog.hpp"
#include "subcorr/harness.hpp"

namespace py = pybind11;
using namespace subcorr;

namespace {

ConjectureMode mode_from(const std::string& s) {
  if (s == "picky") return ConjectureMode::picky;
  if (s == "weak") return ConjectureMode::weak;
  if (s == "strong") return ConjectureMode::strong;
  throw IngestError("unknown mode: " + s);
}

Perm rep_of(const CharTable& t, int class_id) {
  if (class_id < 0 || class_id >= t.classes().size())
    throw IngestError("class id out of range");
  return t.classes().reps[class_id];
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact subnormalizer and character correspondence checks";
  py::register_exception<Error>(m, "Error");

  py::class_<PermGroup>(m, "PermGroup")
      .def_static("from_file",
                  [](const std::string& path) {
                    return load_group_file(path).group;
                  })
      .def_static("from_generators",
                  [](int degree, std::vector<std::vector<int>> gens) {
                    std::vector<Perm> ps;
                    for (auto& img : gens) {
                      for (int& v : img) v -= 1;  // 1-based on the wire
                      ps.push_back(Perm(img));
                    }
                    return PermGroup(degree, ps);
                  })
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly("order", &PermGroup::order)
      .def("__repr__", [](const PermGroup& g) {
        return "<PermGroup degree " + std::to_string(g.degree()) + " order " +
               std::to_string(g.order()) + ">";
      });

  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (const NamedGroup& f : standard_fixtures()) out.push_back(f.name);
    return out;
  });
  m.def("fixture", [](const std::string& name) {
    for (const NamedGroup& f : standard_fixtures())
      if (f.name == name) return f.group;
    throw IngestError("unknown fixture: " + name);
  });

  m.def("conjugacy_classes", [](const PermGroup& g) {
    ConjClasses cls = ConjClasses::of(g);
    py::list out;
    for (int k = 0; k < cls.size(); ++k) {
      py::dict d;
      d["index"] = k;
      d["rep"] = cls.reps[k].to_string();
      d["size"] = cls.sizes[k];
      d["order"] = cls.orders[k];
      out.append(d);
    }
    return out;
  });

  m.def("character_table", [](const PermGroup& g) {
    CharTable t = CharTable::compute(g);
    py::dict out;
    py::list degrees, rows;
    for (int i = 0; i < t.size(); ++i) {
      degrees.append(t.degree(i));
      py::list row;
      for (int k = 0; k < t.classes().size(); ++k)
        row.append(t.irr(i)[k].to_string());
      rows.append(row);
    }
    py::list reps;
    for (const Perm& r : t.classes().reps) reps.append(r.to_string());
    out["degrees"] = degrees;
    out["rows"] = rows;
    out["class_reps"] = reps;
    return out;
  });

  m.def(
      "subnormalizer_data",
      [](const PermGroup& g, uint64_t p, int class_id, uint64_t bound) {
        CharTable t = CharTable::compute(g);
        SubnormalizerData d = subnormalizer(g, rep_of(t, class_id), p, bound);
        py::dict out;
        out["x"] = d.x.to_string();
        out["p"] = d.p;
        out["subset_size"] = d.subset_size;
        out["sub_order"] = d.sub.order();
        out["sylow_intersection_order"] = d.sylow_intersection.order();
        out["is_picky"] = d.is_picky;
        out["subset_is_subgroup"] = d.subset_is_subgroup;
        out["x_subnormal_in_sub"] = d.x_subnormal_in_sub;
        return out;
      },
      py::arg("group"), py::arg("p"), py::arg("class_id"),
      py::arg("bound") = kSubnormBound);

  m.def(
      "check_conjecture",
      [](const PermGroup& g, uint64_t p, int class_id,
         const std::string& mode, uint64_t bound) {
        CharTable t = CharTable::compute(g);
        ConjectureOutcome out =
            check_conjecture(g, p, rep_of(t, class_id), mode_from(mode), bound);
        py::dict d;
        d["ok"] = out.ok;
        d["left"] = out.left;
        d["right"] = out.right;
        d["detail"] = out.detail;
        py::list pairs;
        for (const BijectionPair& pr : out.witness.pairing)
          pairs.append(py::make_tuple(pr.chi, pr.psi, pr.sign));
        d["pairs"] = pairs;
        d["picky"] = out.instance.picky;
        d["p_solvable"] = out.instance.p_solvable;
        d["p_length_one"] = out.instance.p_length_one;
        d["normal_p_complement"] = out.instance.normal_p_complement;
        return d;
      },
      py::arg("group"), py::arg("p"), py::arg("class_id"),
      py::arg("mode") = "strong", py::arg("bound") = kSubnormBound);

  m.def(
      "theorem_witness",
      [](const PermGroup& g, uint64_t p, int class_id,
         const std::string& mode, uint64_t bound) {
        TheoremMode tm;
        if (mode == "A")
          tm = TheoremMode::thm_a;
        else if (mode == "B")
          tm = TheoremMode::thm_b;
        else if (mode == "constructive")
          tm = TheoremMode::thm_44;
        else
          throw IngestError("unknown theorem mode: " + mode);
        CharTable t = CharTable::compute(g);
        AssembledWitness aw =
            assemble_theorem_bijections(g, p, rep_of(t, class_id), tm, bound);
        auto pair_list = [](const std::vector<BijectionPair>& pairing) {
          py::list out;
          for (const BijectionPair& pr : pairing)
            out.append(py::make_tuple(pr.chi, pr.psi, pr.sign));
          return out;
        };
        py::dict d;
        d["ok"] = aw.matching.ok;
        d["pairs"] = pair_list(aw.glued.constructive
                                   ? aw.glued.pairing
                                   : aw.matching.witness.pairing);
        d["constructive"] = aw.glued.constructive;
        py::list fibers;
        for (const FiberWitness& fw : aw.fibers) {
          py::dict f;
          f["theta"] = fw.theta;
          f["phi"] = fw.phi;
          f["epsilon"] = fw.epsilon;
          f["pairs"] = pair_list(fw.pairs);
          f["swept"] = fw.swept;
          fibers.append(f);
        }
        d["fibers"] = fibers;
        return d;
      },
      py::arg("group"), py::arg("p"), py::arg("class_id"), py::arg("mode"),
      py::arg("bound") = kSubnormBound);
}
