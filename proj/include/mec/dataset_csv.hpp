#ifndef MEC_DATASET_CSV_HPP
#define MEC_DATASET_CSV_HPP

#include <iosfwd>
#include <string>

#include "mec/scoring.hpp"

namespace mec {

// CSV dataset: header cells are `name:cardinality`, body rows are integer
// category codes. Parsing is strict; any malformed cell is a hard error with
// row and column. When no header cell carries a cardinality, cardinalities
// are inferred from the observed values (at least 2) and a warning is
// written to `warnings`, since unobserved categories change Dim and every
// penalized score.
Dataset parse_dataset_csv(std::istream& in, const std::string& filename,
                          std::ostream* warnings = nullptr);
Dataset parse_dataset_file(const std::string& path, std::ostream* warnings = nullptr);

}  // namespace mec

#endif  // MEC_DATASET_CSV_HPP
