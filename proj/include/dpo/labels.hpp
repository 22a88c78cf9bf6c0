#pragma once

#include <cstdint>
#include <deque>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>

namespace dpo {

/// Interned label id. Equality of ids is equality of the underlying strings.
using LabelId = std::uint32_t;

/// Process-wide label interning. Ids are assigned in first-seen order and are
/// not stable across runs; anything persisted serializes the strings instead.
class LabelRegistry {
public:
    static LabelRegistry& instance() {
        static LabelRegistry reg;
        return reg;
    }

    LabelId id(std::string_view text) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = ids_.find(text);
        if (it != ids_.end())
            return it->second;
        texts_.emplace_back(text);
        LabelId fresh = static_cast<LabelId>(texts_.size() - 1);
        ids_.emplace(texts_.back(), fresh);
        return fresh;
    }

    // The deque never reallocates stored strings, so the reference stays valid.
    const std::string& text(LabelId id) const {
        std::lock_guard<std::mutex> lock(mutex_);
        return texts_[id];
    }

private:
    LabelRegistry() = default;
    mutable std::mutex mutex_;
    std::deque<std::string> texts_;
    std::unordered_map<std::string_view, LabelId> ids_;
};

inline LabelId label_id(std::string_view text) { return LabelRegistry::instance().id(text); }
inline const std::string& label_text(LabelId id) { return LabelRegistry::instance().text(id); }

} // namespace dpo
