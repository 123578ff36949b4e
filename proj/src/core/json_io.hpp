#pragma once

#include <string>

#include "core/blockfn.hpp"
#include "core/homology.hpp"
#include "core/k0.hpp"

namespace sheafline {

// Parsers throw error(errc::schema_error, ...) with line-addressed messages.
// The char argument is the fallback when the document has no "char" field.

SimplicialFunction parse_complex(const std::string& text, int default_char = 2);
Diagram parse_diagram(const std::string& text, int default_char = 2);
DcatObject parse_object(const std::string& text, int default_char = 2);
DcatMorphism parse_morphism(const std::string& text, int default_char = 2);
PresentedFunctor parse_functor(const std::string& text, int default_char = 2);
IntStripFunction parse_fn(const std::string& text);

// Detects complex vs diagram documents for the `check` command.
enum class DocKind { Complex, Diagram };
DocKind detect_document(const std::string& text);

std::string to_json(const Diagram& d);
std::string to_json(const DcatObject& o);
std::string to_json(const DcatMorphism& f);
std::string to_json(const IntStripFunction& f);
std::string hom_json(const DcatObject& A, const DcatObject& B);
std::string resolve_json(const PresentedFunctor& F, int depth);

// The interval-sheaf view of a diagram: "F_[0,2] (+) F_[1,2)[-1]".
std::string sheaf_text(const Diagram& d);

std::string diagram_svg(const Diagram& d);

} // namespace sheafline
