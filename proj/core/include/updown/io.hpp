#pragma once

// Serialization: family text files, structured exports, value tables, and
// the dot-diagram renderings of a table.

#include <iosfwd>
#include <string>

#include "updown/family.hpp"
#include "updown/phi.hpp"
#include "updown/witness.hpp"

namespace updown {

/// Fixed layout constants for write_ferrers_svg, kept in one place so the
/// rendered bytes are stable.
struct FerrersLayout {
  double unit = 10.0;        // pixels per lattice step
  double dot_radius = 0.35;  // in lattice units
  int margin_units = 1;      // blank border around the grid
};

/// Writes `n=<k>` and then one member per line in ascending mask order,
/// each as comma-separated elements in braces; the empty set prints as {}.
void write_family(std::ostream& out, const Family& f);

/// Parses the write_family format. Blank lines are ignored; anything else
/// malformed (bad header, elements outside [1, n], repeated elements or
/// sets) raises ParseError naming the offending line.
Family read_family(std::istream& in);

/// One-line structured form, e.g. {"n":3,"sets":[[1,2],[3]]}.
std::string family_json(const Family& f);

/// Chain document: `n=<k>` once, then per index an `m=<k>` line followed by
/// that family's members in the write_family line format.
void write_chain(std::ostream& out, const Chain& chain);

/// Two-column TSV with header "m\tphi", one row per size from 0 to 2^n.
void write_phi_table_tsv(std::ostream& out, const PhiTable& table);

/// The same table as {"n":...,"phi":[...]}.
std::string phi_table_json(const PhiTable& table);

/// Dot coordinates of the table's diagram: header "x\ty", then a row for
/// every column x in 1..2^n and every height y in 1..phi(n, x).
void write_ferrers_tsv(std::ostream& out, const PhiTable& table);

/// Standalone SVG of the diagram: one dot per (x, y) cell, the largest
/// square of dots shaded behind the tallest columns, and the lower-bound
/// curve sqrt(2^(n+2) x) - x drawn dashed across the columns.
void write_ferrers_svg(std::ostream& out, const PhiTable& table,
                       const FerrersLayout& layout = {});

}  // namespace updown
