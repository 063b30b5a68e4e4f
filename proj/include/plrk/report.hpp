#ifndef PLRK_REPORT_HPP
#define PLRK_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

namespace plrk {

struct CheckItem {
    std::string id;
    bool pass = false;
    std::string witness; // first violating tuple + difference, when failing
};

struct Report {
    std::vector<CheckItem> items;

    bool ok() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }

    void add(std::string id, bool pass, std::string witness = "") {
        items.push_back({std::move(id), pass, std::move(witness)});
    }

    void merge(const Report& o, const std::string& prefix = "") {
        for (const auto& it : o.items) items.push_back({prefix + it.id, it.pass, it.witness});
    }

    const CheckItem* first_failure() const {
        for (const auto& it : items)
            if (!it.pass) return &it;
        return nullptr;
    }

    std::string str() const {
        std::ostringstream os;
        os << (ok() ? "PASS" : "FAIL") << "\n";
        for (const auto& it : items) {
            os << "  [" << (it.pass ? "ok" : "FAIL") << "] " << it.id;
            if (!it.pass && !it.witness.empty()) os << " :: " << it.witness;
            os << "\n";
        }
        return os.str();
    }
};

} // namespace plrk

#endif
