#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "subcorr/catalog.hpp"

// Writes the standard fixture catalog as group files, one json per group.
int main(int argc, char** argv) {
  CLI::App app{"write the standard fixture catalog as group files"};
  std::string out_dir = "fixtures";
  app.add_option("-o,--out", out_dir, "output directory")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  for (const subcorr::NamedGroup& f : subcorr::standard_fixtures()) {
    std::string path = (fs::path(out_dir) / (f.name + ".json")).string();
    subcorr::save_group_file({f.name, f.group, f.note}, path);
    std::cout << path << " order " << f.group.order() << "\n";
  }
  return 0;
}
