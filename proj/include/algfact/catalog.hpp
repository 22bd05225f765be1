#pragma once

#include "algfact/deformation.hpp"

namespace algfact {

/* Built-in worked examples.  Families:
 *   mn               full matrix algebra M_n              (algebra only)
 *   triangular-split M_n = strict lower + upper           (n >= 2)
 *   lastrow-split    M_n = rows 1..n-1 + row n            (n >= 2)
 *   bimodule-corner  diag pair acting on a corner K^m     (m >= 1)
 * Aliases: m2-split = triangular-split n=2, m3-lastrow = lastrow-split n=3. */

Algebra build_matrix_algebra(std::size_t n, const FieldSpec& f);
Factorization build_triangular_split(std::size_t n, const FieldSpec& f);
Factorization build_lastrow_split(std::size_t n, const FieldSpec& f);
Factorization build_triangular_bimodule(const FieldSpec& f, std::size_t m);

/* Closed-form mixed-product tables, kept separate from
 * canonical_matched_pair so the two derivations check each other. */
struct ActionTables {
  BilinearMap xa_to_a, xa_to_x, ax_to_a, ax_to_x;
};
ActionTables expected_triangular_actions(std::size_t n, const FieldSpec& f);
ActionTables expected_lastrow_actions(std::size_t n, const FieldSpec& f);
ActionTables expected_corner_actions(const FieldSpec& f, std::size_t m);

struct CatalogSelection {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
};

std::vector<std::string> catalog_ids();

/* Applies aliases, fills family defaults, validates ranges.  n and m come
 * from separate flags and are ignored by families that do not use them. */
CatalogSelection resolve_catalog(const std::string& id, std::size_t n = 0, std::size_t m = 0);

std::string selection_label(const CatalogSelection& sel);

Algebra catalog_ambient(const CatalogSelection& sel, const FieldSpec& f);
Factorization catalog_factorization(const CatalogSelection& sel, const FieldSpec& f);
ActionTables catalog_expected_actions(const CatalogSelection& sel, const FieldSpec& f);

/* Named one-point families.  Parameters (all defaulting to 1):
 *   triangular-split n=2: "r_a" with one scalar a
 *   bimodule-corner:      "r^alpha", "r_beta" with m scalars each
 *   lastrow-split n=3:    "r_1", "r_2", "r_3", no parameters
 * Every returned map passes the deformation identity for the selection's
 * canonical matched pair. */
struct KnownDeformation {
  std::string label;
  std::string note;
  DeformationMap map;
};
std::vector<KnownDeformation> known_deformations(const CatalogSelection& sel, const FieldSpec& f,
                                                 const std::vector<Scalar>& params = {});

/* Frozen multiplication table of the deformed algebra for a known map. */
Algebra expected_deformed(const CatalogSelection& sel, const std::string& label,
                          const FieldSpec& f, const std::vector<Scalar>& params = {});

}  // namespace algfact
