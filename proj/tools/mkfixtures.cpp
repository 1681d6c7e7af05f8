// Regenerates the shipped 2.Alt(7) fixture representations from the
// presentation. Development utility; the test suite cross-checks its output.
#include <cstdio>

#include "../tests/support/build_2a7.hpp"
#include "modlie/io.hpp"
#include "modlie/presentation.hpp"
#include "modlie/util.hpp"

using namespace modlie;

int main(int argc, char** argv) {
  std::string outdir = argc > 1 ? argv[1] : "fixtures";
  try {
    write_file(outdir + "/pres/2a7.pres", write_gfpres(fixtures::double_alt7_presentation()));
    auto mods = fixtures::build_2a7_modules();
    write_gfrep_file(outdir + "/reps/2a7_4.rep", mods.four);
    write_gfrep_file(outdir + "/reps/2a7_4s.rep", mods.four_star);
    write_gfrep_file(outdir + "/reps/2a7_14.rep", mods.fourteen);
    std::printf("wrote 2a7 fixtures to %s\n", outdir.c_str());
  } catch (const Error& e) {
    std::fprintf(stderr, "failed: %s\n", e.what());
    return 1;
  }
  return 0;
}
