#pragma once

#include <stdexcept>
#include <string>

namespace sheafline {

enum class errc {
	boundary_point,
	out_of_domain,
	invalid_pair,
	unsupported_dimension,
	dictionary_error,
	composition_error,
	not_a_morphism,
	not_exact,
	schema_error,
	internal_error,
};

struct error : std::runtime_error {
	errc code;
	error(errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

inline const char* errc_name(errc c) {
	switch (c) {
	case errc::boundary_point: return "BoundaryPoint";
	case errc::out_of_domain: return "OutOfDomain";
	case errc::invalid_pair: return "InvalidPair";
	case errc::unsupported_dimension: return "UnsupportedDimension";
	case errc::dictionary_error: return "DictionaryError";
	case errc::composition_error: return "CompositionError";
	case errc::not_a_morphism: return "NotAMorphism";
	case errc::not_exact: return "NotExact";
	case errc::schema_error: return "SchemaError";
	case errc::internal_error: return "InternalError";
	}
	return "Error";
}

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

// internal consistency check; failure indicates a bug, not bad input
inline void require(bool cond, const char* what) {
	if (!cond) throw error(errc::internal_error, std::string("internal invariant violated: ") + what);
}

} // namespace sheafline
