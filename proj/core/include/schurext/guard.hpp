#pragma once

#include <string>

namespace schurext {

// Enumeration limits. Complex construction is far more expensive than the
// pure combinatorics, hence two separate bounds.
struct DegreeGuard {
  int complex_degree = 8;
  int combinat_degree = 12;
};

DegreeGuard degree_guard();
void set_degree_guard(const DegreeGuard& g);

void check_complex_degree(int d, const std::string& what);
void check_combinat_degree(int d, const std::string& what);

}  // namespace schurext
