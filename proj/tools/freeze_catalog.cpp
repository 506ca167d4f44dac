// Regenerates src/catalog_frozen.inc from a full calibration run:
//   ./freeze_catalog > ../src/catalog_frozen.inc
#include <cstdio>

#include "census/catalog.hpp"

int main() {
  auto cat = census::Catalog::calibrate();
  std::printf(
      "// Frozen name -> canonical-code table produced by Catalog::calibrate().\n"
      "// Regenerate with: tools/freeze_catalog > src/catalog_frozen.inc\n"
      "// An empty table makes Catalog::instance() fall back to full calibration.\n"
      "constexpr std::array<FrozenEntry, %d> kFrozenCatalog{{\n",
      (int)cat.entries().size());
  for (const auto& e : cat.entries()) {
    std::printf("    {%d, 0x%llxULL, %lld, {", int(e.pattern),
                (unsigned long long)e.code, (long long)e.aut_order);
    for (int i = 0; i < 5; ++i)
      std::printf("%s%d", i ? ", " : "",
                  i < (int)e.out_degrees.size() ? e.out_degrees[i] : 0);
    std::printf("}, %d},  // %s\n", e.signature,
                std::string(census::pattern_name(e.pattern)).c_str());
  }
  std::printf("}};\n");
  return 0;
}
