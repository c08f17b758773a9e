// Runs the verification checks against the built-in catalog and prints one
// line per criterion. Exit status is nonzero if any criterion fails.

#include <cstdio>

#include "reflectinv/catalog.hpp"
#include "reflectinv/verify.hpp"

int main() {
  using namespace reflectinv;
  VerifyReport report = verify_paper(catalog_get("st8"));
  for (const auto& c : report.checks)
    std::printf("criterion %2d %-4s %-44s %7.2fs  %s\n", c.id, status_name(c.status), c.title.c_str(), c.seconds,
                c.detail.c_str());
  std::printf("%s\n", report.all_passed() ? "acceptance: all criteria met" : "acceptance: FAILED");
  return report.all_passed() ? 0 : 1;
}
