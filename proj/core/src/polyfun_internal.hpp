#pragma once

#include <string>
#include <vector>

#include "schurext/polyfun.hpp"

namespace schurext::poly::detail {

std::vector<std::string> atom_labels(const Atom& atom, const Weight& w);
// Matrix of the atom's functoriality along a weakly increasing position map.
IntegerMatrix atom_monotone(const Atom& atom, const Weight& w, const std::vector<int>& target, int len);

bool use_hook_model(const Partition& lambda);

std::vector<Tableau> weyl_basis(const Partition& lambda, const Weight& w);
IntegerMatrix box_monotone(const Partition& lambda, const Weight& w, const std::vector<int>& target, int len);
IntegerMatrix hook_monotone(int a, int b, const Weight& w, const std::vector<int>& target, int len);

// Ambient description of a single Weyl atom's basis.
void box_ambient(const Partition& lambda, const Weight& w, IntegerMatrix& coords,
                 std::vector<std::vector<int>>& keys);

// Product of multinomials for merging the entries of w along `target`.
Integer merge_coefficient(const Weight& w, const std::vector<int>& target, int len);

void clear_weyl_caches();
void clear_hook_caches();

}  // namespace schurext::poly::detail
