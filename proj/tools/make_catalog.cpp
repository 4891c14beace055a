#include <filesystem>
#include <iostream>

#include "twogroups/catalog.hpp"
#include "twogroups/io.hpp"

// Writes every catalog entry into the given directory.
int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_catalog <dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto& e : twogroups::catalog::entries())
    twogroups::io::write_file((dir / e.file).string(), e.doc.dump(2) + "\n");
  return 0;
}
