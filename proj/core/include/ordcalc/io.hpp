#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ordcalc/group.hpp"

namespace ordcalc {

/// Representation parameters shared by all elements of one group.
struct GroupShape {
  ReprKind kind = ReprKind::Permutation;
  int degree_or_dim = 1;
  int modulus = 0;  // matrices only
};

GroupShape shape_of(const FiniteGroup& G);

/// Permutations come as cycle notation "(1 2 3 4)(5 6)" with 1-based points
/// ("()" is the identity) or as a 1-based image list "2 1 4 3"; matrices as
/// dim*dim row-major residues "1 1 0 0 1 0 0 0 1". Throws ParseError.
GroupElement parse_element(std::string_view text, const GroupShape& shape);

/// Canonical text form: disjoint cycles sorted by smallest moved point for
/// permutations, row-major residues for matrices. parse_element inverts it.
std::string format_element(const GroupElement& e);

/// A parsed group specification file:
///   # comment
///   name heis3
///   kind unitriangular        (or: permutation)
///   dimension 3               (matrices; permutations use: degree N)
///   modulus 3
///   generator 1 1 0 0 1 0 0 0 1
struct GroupFileSpec {
  std::string name;
  GroupShape shape;
  std::vector<GroupElement> generators;
};

GroupFileSpec parse_group_file(std::istream& in);
GroupFileSpec load_group_file(const std::string& path);

/// Lambda-table records "gamma k weight lambda_1 .. lambda_w", one line per
/// basis index k >= 2, ascending (gamma, k).
std::string render_lambda_records(int gamma, int max_class);

/// All classes 1..max_gamma concatenated (class 1 contributes no records).
std::string render_lambda_table(int max_gamma);

/// Compares the class-gamma records against the ones embedded in `golden`
/// (records for other classes are ignored). Returns an empty string on
/// agreement, otherwise a one-line diagnostic.
std::string compare_lambda_golden(int gamma, int max_class, std::string_view golden);

}  // namespace ordcalc
