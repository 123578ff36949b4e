#pragma once

#include "core/presj.hpp"

namespace sheafline {

// An element of the Grothendieck group G(B) of admissible Betti functions,
// restricted to the finitely supported functions the pipeline produces.
struct K0Element {
	IntStripFunction fn;
};

inline bool operator==(const K0Element& a, const K0Element& b) { return a.fn == b.fn; }

inline K0Element k0_add(const K0Element& a, const K0Element& b) { return {add(a.fn, b.fn)}; }
inline K0Element k0_neg(const K0Element& a) { return {neg(a.fn)}; }
inline K0Element k0_sub(const K0Element& a, const K0Element& b) { return k0_add(a, k0_neg(b)); }

K0Element class_of(const PresentedFunctor& F);   // [chi]([F]) = chi(F)
K0Element class_of_diagram(const Diagram& D);    // beta^0 of the corresponding J-object

// Every finitely supported integer function is admissible: its support is
// bounded above and all sums over regions (up u) /\ int(down T u) are finite.
bool is_admissible(const IntStripFunction& fn);

} // namespace sheafline
