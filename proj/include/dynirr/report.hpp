#ifndef DYNIRR_REPORT_HPP
#define DYNIRR_REPORT_HPP

#include <string>
#include <vector>

namespace dynirr {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct StructureReport {
    std::vector<CheckItem> items;
    void add(std::string name, bool pass, std::string detail = "") {
        items.push_back({std::move(name), pass, std::move(detail)});
    }
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& it : items)
            if (!it.pass) out.push_back(it.name);
        return out;
    }
};

}  // namespace dynirr

#endif
