#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subcorr/catalog.hpp"
#include "subcorr/harness.hpp"

namespace {

using namespace subcorr;
using nlohmann::ordered_json;

ConjectureMode mode_from(const std::string& s) {
  if (s == "picky") return ConjectureMode::picky;
  if (s == "weak") return ConjectureMode::weak;
  return ConjectureMode::strong;
}

Perm class_rep(const CharTable& t, int class_id) {
  if (class_id < 0 || class_id >= t.classes().size())
    throw IngestError("class id " + std::to_string(class_id) +
                      " out of range (table has " +
                      std::to_string(t.classes().size()) + " classes)");
  return t.classes().reps[class_id];
}

int run_check(const std::string& file, uint64_t p, int class_id,
              const std::string& mode, uint64_t bound, bool allow_even) {
  if (p == 2 && !allow_even) {
    std::cerr << "p = 2 needs --allow-even; the theorems require p odd\n";
    return 2;
  }
  GroupFile gf = load_group_file(file);
  CharTable tg = CharTable::compute(gf.group);
  Perm x = class_rep(tg, class_id);
  SubnormalizerData d = subnormalizer(gf.group, x, p, bound);
  ConjectureOutcome out = check_conjecture_with(tg, d, mode_from(mode));

  std::cout << "group " << gf.name << " order " << gf.group.order() << " p "
            << p << " class " << class_id << " x " << x.to_string() << "\n"
            << "subset " << d.subset_size << " sub " << d.sub.order()
            << " picky " << d.is_picky << " subgroup " << d.subset_is_subgroup
            << " subnormal " << d.x_subnormal_in_sub << "\n"
            << "p-solvable " << out.instance.p_solvable << " p-length-one "
            << out.instance.p_length_one << " normal-p-complement "
            << out.instance.normal_p_complement << "\n"
            << "irr_x " << out.left << " / " << out.right << " mode " << mode
            << " verdict " << (out.ok ? "pass" : "fail") << "\n";
  if (!out.ok) {
    std::cout << "detail: " << out.detail << "\n";
    return 1;
  }
  for (const BijectionPair& pr : out.witness.pairing) {
    std::cout << "  chi " << pr.chi << " <-> psi " << pr.psi;
    if (pr.sign != 0) std::cout << " sign " << (pr.sign > 0 ? "+" : "-");
    std::cout << "\n";
  }
  return 0;
}

int run_table(const std::string& file) {
  GroupFile gf = load_group_file(file);
  CharTable t = CharTable::compute(gf.group);
  const ConjClasses& cls = t.classes();
  std::cout << "group " << gf.name << " order " << gf.group.order() << " with "
            << cls.size() << " classes\n";
  for (int k = 0; k < cls.size(); ++k)
    std::cout << "class " << k << " rep " << cls.reps[k].to_string()
              << " size " << cls.sizes[k] << " order " << cls.orders[k]
              << "\n";
  for (int i = 0; i < t.size(); ++i) {
    std::cout << "chi_" << i << " degree " << t.degree(i) << " :";
    for (int k = 0; k < cls.size(); ++k)
      std::cout << " " << t.irr(i)[k].to_string();
    std::cout << "\n";
  }
  return 0;
}

int run_sub(const std::string& file, uint64_t p, int class_id, uint64_t bound,
            bool allow_even) {
  if (p == 2 && !allow_even) {
    std::cerr << "p = 2 needs --allow-even; the theorems require p odd\n";
    return 2;
  }
  GroupFile gf = load_group_file(file);
  CharTable tg = CharTable::compute(gf.group);
  Perm x = class_rep(tg, class_id);
  SubnormalizerData d = subnormalizer(gf.group, x, p, bound);
  std::cout << "group " << gf.name << " order " << gf.group.order() << " p "
            << p << " class " << class_id << " x " << x.to_string()
            << " |x| " << x.order() << "\n"
            << "subset size " << d.subset_size << "\n"
            << "generated subgroup order " << d.sub.order() << "\n"
            << "sylow intersection order " << d.sylow_intersection.order()
            << "\n"
            << "picky " << d.is_picky << "\n"
            << "subset is a subgroup " << d.subset_is_subgroup << "\n"
            << "<x> subnormal in Sub " << d.x_subnormal_in_sub << "\n";
  return 0;
}

int run_batch(const std::string& dir, uint64_t max_order,
              std::vector<uint64_t> primes, const std::string& mode,
              const std::string& report_path, uint64_t bound, bool allow_even,
              uint64_t seed, int workers) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  if (!fs::is_directory(dir)) {
    std::cerr << "catalog directory not found: " << dir << "\n";
    return 2;
  }
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());

  BatchFilters filters;
  filters.max_order = max_order;
  filters.primes = std::move(primes);
  filters.mode = mode_from(mode);
  filters.allow_even = allow_even;
  filters.bound = bound;
  filters.seed = seed;
  filters.workers = workers;
  BatchResult res = batch_run(files, filters);
  std::cout << render_report(res);

  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "cannot write report: " << report_path << "\n";
      return 2;
    }
    for (const UnitReport& u : res.units) {
      if (!u.error.empty()) {
        ordered_json j;
        j["file"] = u.file;
        j["p"] = u.p;
        j["status"] = u.error;
        out << j.dump() << "\n";
        continue;
      }
      for (const InstanceRecord& r : u.records) {
        ordered_json j;
        j["group"] = r.group_id;
        j["order"] = r.group_order;
        j["p"] = r.p;
        j["class"] = r.class_index;
        j["x"] = r.x;
        j["x_order"] = r.x_order;
        j["subset"] = r.subset_size;
        j["sub"] = r.sub_order;
        j["picky"] = r.is_picky;
        j["subgroup"] = r.subset_is_subgroup;
        j["subnormal"] = r.x_subnormal_in_sub;
        j["p_solvable"] = r.p_solvable;
        j["p_length_one"] = r.p_length_one;
        j["normal_p_complement"] = r.normal_p_complement;
        j["central_in_sylow_join"] = r.central_in_sylow_join;
        j["x_normal_in_sub"] = r.x_normal_in_sub;
        j["irr_x_group"] = r.irr_x_group;
        j["irr_x_sub"] = r.irr_x_sub;
        j["verdict"] = r.verdict;
        j["note"] = r.note;
        j["witness"] = r.witness;
        j["seconds"] = r.seconds;
        out << j.dump() << "\n";
      }
    }
  }

  bool violations = false, ingest_errors = false;
  for (const UnitReport& u : res.units) {
    if (!u.error.empty() && u.error.rfind("skipped:", 0) != 0)
      ingest_errors = true;
    for (const InstanceRecord& r : u.records)
      if (r.verdict == "fail") violations = true;
  }
  if (violations) return 1;
  if (ingest_errors) return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact subnormalizer and character correspondence checks"};
  app.require_subcommand(1);

  std::string group_file, mode = "strong", catalog, report;
  uint64_t p = 3, bound = kSubnormBound, max_order = kSubnormBound, seed = 0;
  int class_id = 0, workers = 4;
  bool allow_even = false;
  std::vector<uint64_t> primes = {2, 3, 5, 7};
  auto mode_check = CLI::IsMember({"picky", "weak", "strong"});

  CLI::App* check = app.add_subcommand(
      "check", "match nonvanishing characters of G against Sub_G(x)");
  check->add_option("--group", group_file, "group file")->required();
  check->add_option("--p", p, "prime")->required();
  check->add_option("--x", class_id, "class id of x")->required();
  check->add_option("--mode", mode, "picky | weak | strong")
      ->check(mode_check)
      ->capture_default_str();
  check->add_option("--bound", bound, "element bound")->capture_default_str();
  check->add_flag("--allow-even", allow_even, "permit p = 2");

  CLI::App* table = app.add_subcommand("table", "print the character table");
  table->add_option("--group", group_file, "group file")->required();

  CLI::App* sub = app.add_subcommand(
      "sub", "print subnormalizer data for one class representative");
  sub->add_option("--group", group_file, "group file")->required();
  sub->add_option("--p", p, "prime")->required();
  sub->add_option("--x", class_id, "class id of x")->required();
  sub->add_option("--bound", bound, "element bound")->capture_default_str();
  sub->add_flag("--allow-even", allow_even, "permit p = 2");

  CLI::App* batch = app.add_subcommand(
      "batch", "run every (group, prime, class) instance of a catalog");
  batch->add_option("--catalog", catalog, "directory of group files")
      ->required();
  batch->add_option("--max-order", max_order, "skip larger groups")
      ->capture_default_str();
  batch->add_option("--primes", primes, "primes to sweep")
      ->delimiter(',')
      ->capture_default_str();
  batch->add_option("--mode", mode, "picky | weak | strong")
      ->check(mode_check)
      ->capture_default_str();
  batch->add_option("--report", report, "write one json record per line");
  batch->add_option("--bound", bound, "element bound")->capture_default_str();
  batch->add_flag("--allow-even", allow_even, "permit p = 2");
  batch->add_option("--seed", seed, "seed for sampled checks")
      ->capture_default_str();
  batch->add_option("--workers", workers, "parallel units")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed())
      return run_check(group_file, p, class_id, mode, bound, allow_even);
    if (table->parsed()) return run_table(group_file);
    if (sub->parsed())
      return run_sub(group_file, p, class_id, bound, allow_even);
    return run_batch(catalog, max_order, primes, mode, report, bound,
                     allow_even, seed, workers);
  } catch (const TheoremViolation& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return 1;
  } catch (const UniquenessViolation& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return 1;
  } catch (const HypothesisFailed& e) {
    std::cerr << "hypothesis failed: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
