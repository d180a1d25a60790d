#include "qcontig/workspace.hpp"

#include <algorithm>

namespace qcontig {

Symbol Workspace::register_symbol(const std::string& name) {
    if (name.empty()) throw error("symbol name must be nonempty");
    std::lock_guard lock(mutex_);
    if (std::find(names_.begin(), names_.end(), name) != names_.end())
        throw duplicate_symbol_error("symbol already registered: " + name);
    names_.push_back(name);
    return Symbol{static_cast<std::uint32_t>(names_.size() - 1)};
}

Symbol Workspace::symbol(const std::string& name) {
    if (name.empty()) throw error("symbol name must be nonempty");
    std::lock_guard lock(mutex_);
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it != names_.end())
        return Symbol{static_cast<std::uint32_t>(it - names_.begin())};
    names_.push_back(name);
    return Symbol{static_cast<std::uint32_t>(names_.size() - 1)};
}

bool Workspace::contains(const std::string& name) const {
    std::lock_guard lock(mutex_);
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

Symbol Workspace::lookup(const std::string& name) const {
    std::lock_guard lock(mutex_);
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw error("unknown symbol: " + name);
    return Symbol{static_cast<std::uint32_t>(it - names_.begin())};
}

} // namespace qcontig
