#ifndef SDEP_IO_HPP
#define SDEP_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "sdep/hilbert.hpp"
#include "sdep/module.hpp"
#include "sdep/stanley.hpp"

namespace sdep::io {

using Json = nlohmann::ordered_json;

struct ModuleFile {
  ModulePresentation presentation;
  std::optional<MultiDegree> g;
};

/// `field` replaces the ring's field before any coefficient is read.
ModuleFile parse_module(const Json& doc, const std::string& source,
                        const std::optional<FieldSpec>& field = {});
ModuleFile read_module_file(const std::string& path, const std::optional<FieldSpec>& field = {});
/// The presentation written out explicitly ("kind": "presentation").
Json module_to_json(const ModulePresentation& pres, const std::optional<MultiDegree>& g = {});

/// Accepts the "summands" form and the "intervals" form (which needs g).
HilbertDecomposition parse_decomposition(const Json& doc, std::size_t n, const MultiDegree& g,
                                         const std::string& source);
HilbertDecomposition read_decomposition_file(const std::string& path, std::size_t n,
                                             const MultiDegree& g);
/// "summands" form in the given order (witness variables refer to it);
/// adjacent equal summands are merged into "mult".
Json decomposition_to_json(const HilbertDecomposition& d);

inline constexpr const char* kBasisConvention = "rref-nonpivot-unit-vectors";

struct Certificate {
  ModulePresentation presentation;
  MultiDegree g;
  HilbertDecomposition decomposition;
  Assignment witness;
  std::optional<Depth> sdepth;
};

Json certificate_to_json(const Certificate& cert);
Certificate parse_certificate(const Json& doc, const std::string& source);
Certificate read_certificate_file(const std::string& path);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sdep::io

#endif  // SDEP_IO_HPP
