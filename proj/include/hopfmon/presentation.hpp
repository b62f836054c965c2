#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfmon/hopf.hpp"

namespace hopfmon {

// Contents of a presentation file.  A "hopf" file carries the full Hopf
// structure and optional named R-matrices; an "algebra" file only the product.
struct Presentation {
  AlgebraPtr algebra;
  HopfPtr hopf;  // null for algebra files
  std::vector<std::pair<std::string, TensorElement>> r_matrices;

  // Throws NotApplicable when the name is unknown or the file has none.
  const TensorElement& r_matrix(const std::optional<std::string>& name, std::string* chosen = nullptr) const;
};

inline constexpr const char* presentation_format = "hopfmon-presentation";
inline constexpr int presentation_version = 1;

// Throws MalformedPresentation naming the JSON path (or line and column for
// syntax errors).  The Hopf structure is loaded unchecked; validation is a
// separate step.
Presentation parse_presentation(const std::string& text);
Presentation load_presentation(const std::string& path);

// Deterministic JSON text, two-space indented, keys in basis order.
std::string write_presentation(const Presentation& p);

// All Hopf axioms, then the quasitriangular relations of each named R; for
// algebra files only the algebra axioms.
Report validate_presentation(const Presentation& p);

}  // namespace hopfmon
