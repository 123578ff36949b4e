#include "core/k0.hpp"

namespace sheafline {

K0Element class_of(const PresentedFunctor& F) { return {euler(F)}; }

K0Element class_of_diagram(const Diagram& D) {
	K0Element e;
	for (const auto& [pt, mult] : D.points) e.fn.set(pt, mult);
	return e;
}

bool is_admissible(const IntStripFunction& fn) {
	(void)fn;
	return true;
}

} // namespace sheafline
