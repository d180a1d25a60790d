#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "qcontig/errors.hpp"

namespace qcontig {

/// A registered indeterminate. Symbols are cheap value handles; the name
/// lives in the owning workspace.
struct Symbol {
    std::uint32_t id = 0;

    friend bool operator==(Symbol a, Symbol b) { return a.id == b.id; }
    friend auto operator<=>(Symbol a, Symbol b) { return a.id <=> b.id; }
};

/// Append-only symbol registry. Names are unique, ids are dense and stable
/// for the lifetime of the workspace. Registration is synchronized; lookups
/// of already-registered symbols are safe from any thread because the
/// storage never shrinks or reorders.
class Workspace {
public:
    Workspace() = default;
    Workspace(std::initializer_list<std::string> names) {
        for (const auto& n : names) register_symbol(n);
    }

    Symbol register_symbol(const std::string& name);

    /// Symbol for `name`, registering it on first use.
    Symbol symbol(const std::string& name);

    bool contains(const std::string& name) const;
    Symbol lookup(const std::string& name) const; // throws if absent

    const std::string& name(Symbol s) const { return names_.at(s.id); }
    std::uint32_t size() const { return static_cast<std::uint32_t>(names_.size()); }

private:
    std::vector<std::string> names_;
    mutable std::mutex mutex_;
};

} // namespace qcontig
