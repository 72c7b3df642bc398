#ifndef BIMTOEP_IO_HPP
#define BIMTOEP_IO_HPP

#include "bimtoep/crossed.hpp"
#include "bimtoep/models.hpp"

#include <string>

namespace bimtoep {

struct ParseError : Error {
    using Error::Error;
};

/// Loads a model description (JSON) and eagerly builds + validates the
/// ladder.  `spec` may also be the name of a builtin model.
Model load_model(const std::string& path_or_builtin);

std::string model_to_json(const Model& m);
Model model_from_json(const std::string& text, const std::string& name = "file");

std::string operator_to_json(const OperatorMatrix& M);
OperatorMatrix operator_from_json(const std::string& text, const LadderPtr& ladder);

std::string section_to_json(const CrossSection& f);
CrossSection section_from_json(const std::string& text, const LadderPtr& ladder);

std::string report_to_json(const std::string& model_name, std::uint64_t seed,
                           const ValidationReport& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace bimtoep

#endif
