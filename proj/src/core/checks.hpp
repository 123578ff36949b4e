#pragma once

#include <string>
#include <vector>

#include "core/blockfn.hpp"
#include "core/homology.hpp"

namespace sheafline {

struct CheckItem {
	std::string name;
	bool pass = false;
	std::string detail;
};

struct CheckReport {
	std::vector<CheckItem> items;
	bool ok() const {
		for (const auto& i : items)
			if (!i.pass) return false;
		return true;
	}
};

CheckReport run_checks(const SimplicialFunction& f);
CheckReport run_checks(const Diagram& d);

std::string report_json(const CheckReport& r);
std::string report_text(const CheckReport& r);

} // namespace sheafline
